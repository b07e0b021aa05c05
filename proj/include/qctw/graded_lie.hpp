#pragma once

// Matrix realizations of g = sp(Q) (quaternionic, size n+2) and
// gt = su(Qt) (complex, size 2n+4), their |2|-gradings and brackets.
//
// Grading components are the eigenspaces of ad(E) for the diagonal grading
// element E, extracted by Lagrange interpolation in ad(E). The slot layout of
// the block form of sp(Q),
//
//        [ a      z       q   ]
//   M =  [ xbar   A0   -zbar^t ]
//        [ pbar  -x^t    -abar ]
//
// is kept separately (to_slots / from_slots / block_project) and used as an
// independent cross-check. Slot values are the matrix entries themselves, so
// the element written [xbar]_{-1} has the vector xbar in its first column.

#include "qctw/matrix.hpp"

#include <array>
#include <string>
#include <vector>

namespace qctw {

inline constexpr int kMinGrade = -2;
inline constexpr int kMaxGrade = 2;

/// Size of the quaternionic / complex matrices for a given n.
inline std::size_t g_size(int n) { return static_cast<std::size_t>(n) + 2; }
inline std::size_t gt_size(int n) { return 2 * static_cast<std::size_t>(n) + 4; }
/// n recovered from a matrix; throws std::invalid_argument on impossible sizes.
int n_of(const QMatrix& m);
int n_of(const CMatrix& m);

// --- hermitian forms ------------------------------------------------------

/// Gram matrix H of Q: pairs slots 0 and n+1, identity in between.
QMatrix form_Q(int n);
/// Gram matrix of Qt in the (y_0..y_{n+1}, z_0..z_{n+1}) ordering.
CMatrix form_Qtilde(int n);
/// x^* H x.
Rational evaluate_form(const QMatrix& h, const HVector& x);
Rational evaluate_form(const CMatrix& h, const CVector& x);
/// The displayed quadratic forms, written out term by term.
Rational displayed_Q(const HVector& x);
Rational displayed_Qtilde(const CVector& y, const CVector& z);

// --- grading --------------------------------------------------------------

/// diag(1, 0, ..., 0, -1).
QMatrix grading_element(int n);
/// Weight 1 on y_0, -1 on y_{n+1}, 0 on every other coordinate.
CMatrix grading_element_tilde(int n);

/// M^* H + H M = 0 (and tr M = 0 for gt). Throws on size mismatch with n.
bool in_algebra(const QMatrix& m, int n);
bool in_algebra(const CMatrix& m, int n);

/// ad(E)-eigencomponent of eigenvalue k. Throws std::out_of_range unless -2 <= k <= 2.
QMatrix grade_project(const QMatrix& m, int k);
CMatrix grade_project(const CMatrix& m, int k);

/// Smallest i with M in g^i = g_i + ... + g_2; the zero matrix has degree 2.
int filtration_degree(const QMatrix& m);
int filtration_degree(const CMatrix& m);

/// Element of g or gt together with its grading decomposition.
template <class E>
class GradedElement {
 public:
  /// Throws std::invalid_argument when m is not in the algebra.
  explicit GradedElement(Matrix<E> m) : m_(std::move(m)), n_(n_of(m_)) {
    if (!in_algebra(m_, n_)) throw std::invalid_argument("GradedElement: matrix not in algebra");
  }

  const Matrix<E>& matrix() const { return m_; }
  int n() const { return n_; }
  Matrix<E> component(int k) const { return grade_project(m_, k); }
  std::array<Matrix<E>, 5> components() const {
    return {component(-2), component(-1), component(0), component(1), component(2)};
  }
  int filtration_degree() const { return qctw::filtration_degree(m_); }
  bool in_parabolic() const { return filtration_degree() >= 0; }
  bool in_nilradical() const { return filtration_degree() >= 1; }

  friend GradedElement bracket(const GradedElement& a, const GradedElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("bracket: elements of different algebras");
    return GradedElement(commutator(a.m_, b.m_));
  }
  friend bool operator==(const GradedElement& a, const GradedElement& b) { return a.m_ == b.m_; }

 private:
  Matrix<E> m_;
  int n_;
};

using GElement = GradedElement<Quaternion>;
using GtElement = GradedElement<Complex>;

// --- slots of the block form of sp(Q) --------------------------------------

struct SpSlots {
  Quaternion a;
  QMatrix A0;     ///< n x n, in sp(n)
  HVector xbar;   ///< first column, rows 1..n
  HVector z;      ///< first row, columns 1..n
  Quaternion pbar;
  Quaternion q;
};

SpSlots to_slots(const QMatrix& m);
/// Fills the dependent entries from the independent ones.
QMatrix from_slots(const SpSlots& s);
/// Grade of entry (row, col) read off the block form.
int block_grade(int n, std::size_t row, std::size_t col);
/// Projection that keeps the entries whose block grade is k.
QMatrix block_project(const QMatrix& m, int k);

QMatrix make_g_minus2(int n, const Quaternion& pbar);
QMatrix make_g_minus1(const HVector& xbar);
QMatrix make_g_zero(const Quaternion& a, const QMatrix& a0);
QMatrix make_g_zero(int n, const Quaternion& a);
QMatrix make_g_plus1(const HVector& z);
QMatrix make_g_plus2(int n, const Quaternion& q);

/// Stabilizer test for the quaternionic line H d_0: M d_0 lies in d_0 H.
bool stabilizes_line(const QMatrix& m);
/// Stabilizer test for the complex line C d_0 (first coordinate).
bool stabilizes_line(const CMatrix& m);

// --- bases, dimensions and structure constants -------------------------------

struct SlotInfo {
  std::string label;
  std::size_t row;
  std::size_t col;
  int grade;
};

/// Independent slots of the block form, ordered by grade.
std::vector<SlotInfo> slot_layout(int n);

struct BasisElement {
  std::string label;
  int grade;
  std::size_t slot;  ///< index into slot_layout
  QMatrix matrix;
};

/// Real basis of sp(Q): one element per (slot, admissible quaternion unit).
std::vector<BasisElement> real_basis_g(int n);
/// Real basis of su(Qt), built as Ht S with S skew-hermitian, trace removed.
std::vector<CMatrix> real_basis_gtilde(int n);

std::size_t grade_dimension_g(int n, int k);
std::size_t grade_dimension_gtilde(int n, int k);
/// Real dimension of the solution space of M^* H + H M = 0 (no block form used).
std::size_t solution_space_dimension_g(int n);

struct BracketRow {
  std::size_t i;
  std::size_t j;
  std::size_t slot;
  Quaternion coeff;
};

/// Nonzero slot values of [b_i, b_j] over all ordered pairs i != j.
std::vector<BracketRow> bracket_table(int n);
/// Rebuilds [b_i, b_j] from the rows of a table that belong to (i, j).
QMatrix assemble_bracket(int n, const std::vector<BracketRow>& rows, std::size_t i, std::size_t j);

}  // namespace qctw
