#pragma once

// The inclusion phi: gl(n+2, H) -> gl(2n+4, C), U + jV |-> [[U, -conj V], [V, conj U]],
// compatible with identify_vector, and the projection phi_{-1} = proj_{gt_{-1}} o phi.

#include "qctw/graded_lie.hpp"

#include <functional>
#include <optional>
#include <string>

namespace qctw {

/// Element of gt_{-1} written as the row vector (y, z_-, z, z_+).
struct Row4 {
  CVector y;
  Complex z_minus;
  CVector z;
  Complex z_plus;

  static Row4 zero(int n) { return {CVector(n), Complex(), CVector(n), Complex()}; }
  int n() const { return static_cast<int>(y.size()); }
  bool is_zero() const;

  friend bool operator==(const Row4& a, const Row4& b) {
    return a.y == b.y && a.z_minus == b.z_minus && a.z == b.z && a.z_plus == b.z_plus;
  }
  friend bool operator!=(const Row4& a, const Row4& b) { return !(a == b); }
  friend Row4 operator+(const Row4& a, const Row4& b);
  friend Row4 operator-(const Row4& a);
};

std::string to_string(const Row4& r);

CMatrix phi(const QMatrix& m);
/// Group version on matrix representatives; same formula.
inline CMatrix Phi(const QMatrix& g) { return phi(g); }
/// Two representatives of the same element of G or Gt (quotients by +-Id).
bool equal_mod_sign(const CMatrix& a, const CMatrix& b);
bool equal_mod_sign(const QMatrix& a, const QMatrix& b);

/// The displayed shape of gt_{-1}.
CMatrix row4_to_matrix(const Row4& r);
/// Throws std::invalid_argument when m is not of the displayed gt_{-1} shape.
Row4 row4_from_matrix(const CMatrix& m);

/// Closed form on the grade -2, -1 and 0 slots of an element of sp(Q):
///   [pbar]_{-2} -> (0, 0, 0, -p_v), [xbar]_{-1} -> (conj(x_u), 0, -x_v, 0),
///   [(a, A0)]_0 -> (0, a_v, 0, 0); grades 1 and 2 contribute nothing.
Row4 phi_minus1(const QMatrix& m);
/// proj_{gt_{-1}}(phi(m)), computed through ad(Et).
Row4 phi_minus1_projected(const QMatrix& m);

using PhiMap = std::function<CMatrix(const QMatrix&)>;

struct FiltrationFinding {
  std::string property;
  QMatrix counterexample;
};

struct FiltrationReport {
  std::size_t trials = 0;
  std::size_t preimage_hits = 0;  ///< samples with phi(M) in pt (non-vacuity of the preimage check)
  std::vector<FiltrationFinding> failures;
  bool passed() const { return failures.empty(); }
};

/// Samples p_+, g^{-1} and mixed elements and checks phi(p_+) in pt, phi(g^{-1}) in gt^{-1},
/// and phi(M) in pt => M in p.
FiltrationReport filtration_compat_check(int n, std::size_t trials, std::uint64_t seed, const PhiMap& map = phi);

}  // namespace qctw
