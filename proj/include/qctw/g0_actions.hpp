#pragma once

// The grading-preserving group G0 = CSp(1)Sp(n), its module actions on g_{-1},
// g_{-2} and on the sphere of unit imaginary quaternions, and the adjoint action.
//
// A G0 element (s, z, A) is realized as diag(s z, A, s^{-1} z). The module maps
// below coincide with Ad(g) = g M g^{-1} on the matching grade; ad_conjugate is
// the opposite conjugation g^{-1} M g.

#include "qctw/graded_lie.hpp"

#include <optional>

namespace qctw {

class G0Element {
 public:
  /// Throws std::invalid_argument unless s > 0, |z| = 1 and A^* A = Id.
  G0Element(Rational s, Quaternion z, QMatrix a);
  static G0Element identity(int n);

  const Rational& s() const { return s_; }
  const Quaternion& z() const { return z_; }
  const QMatrix& A() const { return a_; }
  int n() const { return static_cast<int>(a_.rows()); }

  QMatrix matrix() const;
  G0Element inverse() const;
  friend G0Element operator*(const G0Element& g, const G0Element& h);
  /// Equality in G0 (representatives differ at most by -Id).
  friend bool operator==(const G0Element& g, const G0Element& h);

 private:
  Rational s_;
  Quaternion z_;
  QMatrix a_;
};

/// Unit imaginary quaternion a1 i + a2 j + a3 k, standing for I = a1 I1 + a2 I2 + a3 I3.
class TwistorPoint {
 public:
  /// Throws std::invalid_argument unless q is imaginary of norm 1.
  explicit TwistorPoint(Quaternion q);
  static TwistorPoint i() { return TwistorPoint(Quaternion::unit_i()); }

  const Quaternion& quaternion() const { return q_; }
  /// a = 1, 2, 3.
  const Rational& coefficient(int a) const { return q_[a]; }
  friend bool operator==(const TwistorPoint& p, const TwistorPoint& q) { return p.q_ == q.q_; }

 private:
  Quaternion q_;
};

/// xbar -> s^{-1} A xbar conj(z).
HVector rho_minus1(const G0Element& g, const HVector& xbar);
/// pbar -> s^{-2} z pbar conj(z). Throws std::invalid_argument for non-imaginary pbar.
Quaternion rho_minus2(const G0Element& g, const Quaternion& pbar);
/// q -> z q conj(z).
TwistorPoint rho_0(const G0Element& g, const TwistorPoint& q);

/// Phi(matrix(g)) preserves the complex line C d_0.
bool in_Ptilde_preimage(const G0Element& g);

/// Some unit z with z i conj(z) = I. Returns j at the antipode I = -i. Returns
/// nullopt when no rational unit quaternion does the job (the rational Hopf
/// fibre over I is empty) or the search bound is exceeded.
std::optional<Quaternion> solve_zI(const TwistorPoint& target);

/// g^{-1} M g.
QMatrix ad_conjugate(const G0Element& g, const QMatrix& m);

bool is_unit(const Quaternion& q);
/// A^* A = Id.
bool is_symplectic_unitary(const QMatrix& a);

}  // namespace qctw
