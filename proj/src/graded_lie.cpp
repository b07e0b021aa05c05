#include "qctw/graded_lie.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace qctw {

int n_of(const QMatrix& m) {
  if (!m.square() || m.rows() < 3) throw std::invalid_argument("expected square quaternionic matrix of size n+2 >= 3");
  return static_cast<int>(m.rows()) - 2;
}

int n_of(const CMatrix& m) {
  if (!m.square() || m.rows() < 6 || m.rows() % 2 != 0)
    throw std::invalid_argument("expected square complex matrix of size 2n+4 >= 6");
  return static_cast<int>(m.rows() / 2) - 2;
}

namespace {

void require_size(std::size_t actual_rows, std::size_t actual_cols, std::size_t expected) {
  if (actual_rows != expected || actual_cols != expected) throw std::invalid_argument("matrix size does not match n");
}

template <class T>
Matrix<T> ad(const Matrix<T>& e, const Matrix<T>& m) {
  return e * m - m * e;
}

template <class T>
Matrix<T> project(const Matrix<T>& e, const Matrix<T>& m, int k) {
  if (k < kMinGrade || k > kMaxGrade) throw std::out_of_range("grade outside -2..2");
  Matrix<T> x = m;
  for (int mu = kMinGrade; mu <= kMaxGrade; ++mu) {
    if (mu == k) continue;
    Matrix<T> shifted = ad(e, x) - x.scaled(Rational(mu));
    x = shifted.scaled(rat(1, k - mu));
  }
  return x;
}

template <class T>
int degree(const Matrix<T>& e, const Matrix<T>& m) {
  for (int k = kMinGrade; k <= kMaxGrade; ++k)
    if (!project(e, m, k).is_zero()) return k;
  return kMaxGrade;
}

}  // namespace

// --- forms -----------------------------------------------------------------

QMatrix form_Q(int n) {
  const std::size_t s = g_size(n);
  QMatrix h(s, s);
  h(0, s - 1) = Quaternion(1);
  h(s - 1, 0) = Quaternion(1);
  for (std::size_t a = 1; a + 1 < s; ++a) h(a, a) = Quaternion(1);
  return h;
}

CMatrix form_Qtilde(int n) {
  const std::size_t half = g_size(n);
  CMatrix h(2 * half, 2 * half);
  for (std::size_t block = 0; block < 2; ++block) {
    const std::size_t o = block * half;
    h(o, o + half - 1) = Complex(1);
    h(o + half - 1, o) = Complex(1);
    for (std::size_t a = 1; a + 1 < half; ++a) h(o + a, o + a) = Complex(1);
  }
  return h;
}

Rational evaluate_form(const QMatrix& h, const HVector& x) {
  if (h.rows() != x.size()) throw std::invalid_argument("evaluate_form: length mismatch");
  Quaternion acc;
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) acc += conj(x[r]) * h(r, c) * x[c];
  if (!is_zero(acc.x) || !is_zero(acc.y) || !is_zero(acc.z)) throw std::logic_error("hermitian form took non-real value");
  return acc.w;
}

Rational evaluate_form(const CMatrix& h, const CVector& x) {
  if (h.rows() != x.size()) throw std::invalid_argument("evaluate_form: length mismatch");
  Complex acc;
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) acc += conj(x[r]) * h(r, c) * x[c];
  if (!is_zero(acc.im)) throw std::logic_error("hermitian form took non-real value");
  return acc.re;
}

Rational displayed_Q(const HVector& x) {
  const std::size_t last = x.size() - 1;
  Quaternion acc = x[0] * conj(x[last]) + x[last] * conj(x[0]);
  for (std::size_t a = 1; a < last; ++a) acc += x[a] * conj(x[a]);
  return acc.w;
}

Rational displayed_Qtilde(const CVector& y, const CVector& z) {
  const std::size_t last = y.size() - 1;
  Complex acc = y[0] * conj(y[last]) + y[last] * conj(y[0]) + z[0] * conj(z[last]) + z[last] * conj(z[0]);
  for (std::size_t a = 1; a < last; ++a) acc += y[a] * conj(y[a]) + z[a] * conj(z[a]);
  return acc.re;
}

// --- grading ---------------------------------------------------------------

QMatrix grading_element(int n) {
  const std::size_t s = g_size(n);
  QMatrix e(s, s);
  e(0, 0) = Quaternion(1);
  e(s - 1, s - 1) = Quaternion(-1);
  return e;
}

CMatrix grading_element_tilde(int n) {
  const std::size_t half = g_size(n);
  CMatrix e(2 * half, 2 * half);
  e(0, 0) = Complex(1);
  e(half - 1, half - 1) = Complex(-1);
  return e;
}

bool in_algebra(const QMatrix& m, int n) {
  require_size(m.rows(), m.cols(), g_size(n));
  const QMatrix h = form_Q(n);
  return (m.adjoint() * h + h * m).is_zero();
}

bool in_algebra(const CMatrix& m, int n) {
  require_size(m.rows(), m.cols(), gt_size(n));
  const CMatrix h = form_Qtilde(n);
  return (m.adjoint() * h + h * m).is_zero() && is_zero(m.trace());
}

QMatrix grade_project(const QMatrix& m, int k) { return project(grading_element(n_of(m)), m, k); }
CMatrix grade_project(const CMatrix& m, int k) { return project(grading_element_tilde(n_of(m)), m, k); }

int filtration_degree(const QMatrix& m) { return degree(grading_element(n_of(m)), m); }
int filtration_degree(const CMatrix& m) { return degree(grading_element_tilde(n_of(m)), m); }

// --- slots -----------------------------------------------------------------

SpSlots to_slots(const QMatrix& m) {
  const int n = n_of(m);
  const std::size_t last = g_size(n) - 1;
  SpSlots s;
  s.a = m(0, 0);
  s.A0 = QMatrix(n, n);
  s.xbar.resize(n);
  s.z.resize(n);
  for (int r = 0; r < n; ++r) {
    s.xbar[r] = m(r + 1, 0);
    s.z[r] = m(0, r + 1);
    for (int c = 0; c < n; ++c) s.A0(r, c) = m(r + 1, c + 1);
  }
  s.pbar = m(last, 0);
  s.q = m(0, last);
  return s;
}

QMatrix from_slots(const SpSlots& s) {
  const std::size_t n = s.xbar.size();
  if (s.z.size() != n || s.A0.rows() != n || s.A0.cols() != n) throw std::invalid_argument("from_slots: inconsistent n");
  const std::size_t last = n + 1;
  QMatrix m(n + 2, n + 2);
  m(0, 0) = s.a;
  m(last, last) = -conj(s.a);
  m(last, 0) = s.pbar;
  m(0, last) = s.q;
  for (std::size_t r = 0; r < n; ++r) {
    m(r + 1, 0) = s.xbar[r];
    m(last, r + 1) = -conj(s.xbar[r]);  // -x^t with x = conj(xbar)
    m(0, r + 1) = s.z[r];
    m(r + 1, last) = -conj(s.z[r]);
    for (std::size_t c = 0; c < n; ++c) m(r + 1, c + 1) = s.A0(r, c);
  }
  return m;
}

int block_grade(int n, std::size_t row, std::size_t col) {
  const std::size_t last = g_size(n) - 1;
  auto band = [last](std::size_t i) { return i == 0 ? 0 : (i == last ? 2 : 1); };
  // rows/cols: 0 = first, 1 = middle block, 2 = last
  static constexpr int table[3][3] = {{0, 1, 2}, {-1, 0, 1}, {-2, -1, 0}};
  return table[band(row)][band(col)];
}

QMatrix block_project(const QMatrix& m, int k) {
  const int n = n_of(m);
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (block_grade(n, r, c) == k) out(r, c) = m(r, c);
  return out;
}

namespace {

SpSlots empty_slots(int n) {
  SpSlots s;
  s.A0 = QMatrix(n, n);
  s.xbar.assign(n, Quaternion());
  s.z.assign(n, Quaternion());
  return s;
}

}  // namespace

QMatrix make_g_minus2(int n, const Quaternion& pbar) {
  SpSlots s = empty_slots(n);
  s.pbar = pbar;
  return from_slots(s);
}

QMatrix make_g_minus1(const HVector& xbar) {
  SpSlots s = empty_slots(static_cast<int>(xbar.size()));
  s.xbar = xbar;
  return from_slots(s);
}

QMatrix make_g_zero(const Quaternion& a, const QMatrix& a0) {
  SpSlots s = empty_slots(static_cast<int>(a0.rows()));
  s.a = a;
  s.A0 = a0;
  return from_slots(s);
}

QMatrix make_g_zero(int n, const Quaternion& a) { return make_g_zero(a, QMatrix(n, n)); }

QMatrix make_g_plus1(const HVector& z) {
  SpSlots s = empty_slots(static_cast<int>(z.size()));
  s.z = z;
  return from_slots(s);
}

QMatrix make_g_plus2(int n, const Quaternion& q) {
  SpSlots s = empty_slots(n);
  s.q = q;
  return from_slots(s);
}

bool stabilizes_line(const QMatrix& m) {
  for (std::size_t r = 1; r < m.rows(); ++r)
    if (!is_zero(m(r, 0))) return false;
  return true;
}

bool stabilizes_line(const CMatrix& m) {
  for (std::size_t r = 1; r < m.rows(); ++r)
    if (!is_zero(m(r, 0))) return false;
  return true;
}

// --- bases -----------------------------------------------------------------

std::vector<SlotInfo> slot_layout(int n) {
  const std::size_t last = g_size(n) - 1;
  std::vector<SlotInfo> slots;
  slots.push_back({"pbar", last, 0, -2});
  for (int r = 1; r <= n; ++r) slots.push_back({"xbar[" + std::to_string(r) + "]", std::size_t(r), 0, -1});
  slots.push_back({"a", 0, 0, 0});
  for (int r = 1; r <= n; ++r)
    for (int c = r; c <= n; ++c)
      slots.push_back({"A0[" + std::to_string(r) + "," + std::to_string(c) + "]", std::size_t(r), std::size_t(c), 0});
  for (int c = 1; c <= n; ++c) slots.push_back({"z[" + std::to_string(c) + "]", 0, std::size_t(c), 1});
  slots.push_back({"q", 0, last, 2});
  return slots;
}

namespace {

/// Quaternion units admissible in a slot (imaginary on pbar, q and the A0 diagonal).
std::vector<Quaternion> slot_units(const SlotInfo& s, std::size_t last) {
  const bool imaginary = (s.row == last && s.col == 0) || (s.row == 0 && s.col == last) ||
                         (s.row == s.col && s.row != 0 && s.row != last);
  std::vector<Quaternion> units;
  for (int b = imaginary ? 1 : 0; b < 4; ++b) {
    Quaternion u = Quaternion::basis(b);
    // grade < 0 slots carry conjugated symbols (xbar, pbar)
    if (s.grade < 0) u = conj(u);
    units.push_back(u);
  }
  return units;
}

QMatrix single_slot_element(int n, const SlotInfo& s, const Quaternion& value) {
  SpSlots slots = empty_slots(n);
  const std::size_t last = g_size(n) - 1;
  if (s.row == last && s.col == 0) {
    slots.pbar = value;
  } else if (s.row == 0 && s.col == last) {
    slots.q = value;
  } else if (s.row == 0 && s.col == 0) {
    slots.a = value;
  } else if (s.col == 0) {
    slots.xbar[s.row - 1] = value;
  } else if (s.row == 0) {
    slots.z[s.col - 1] = value;
  } else {
    slots.A0(s.row - 1, s.col - 1) = value;
    if (s.row != s.col) slots.A0(s.col - 1, s.row - 1) = -conj(value);
  }
  return from_slots(slots);
}

}  // namespace

std::vector<BasisElement> real_basis_g(int n) {
  const std::size_t last = g_size(n) - 1;
  const auto slots = slot_layout(n);
  std::vector<BasisElement> basis;
  for (std::size_t si = 0; si < slots.size(); ++si) {
    for (const Quaternion& u : slot_units(slots[si], last)) {
      basis.push_back({slots[si].label + "=" + to_string(u), slots[si].grade, si, single_slot_element(n, slots[si], u)});
    }
  }
  return basis;
}

std::vector<CMatrix> real_basis_gtilde(int n) {
  const std::size_t size = gt_size(n);
  const CMatrix h = form_Qtilde(n);
  std::vector<CMatrix> skew;
  for (std::size_t r = 0; r < size; ++r) {
    CMatrix d(size, size);
    d(r, r) = Complex::i();
    skew.push_back(d);
    for (std::size_t c = r + 1; c < size; ++c) {
      CMatrix real_part(size, size);
      real_part(r, c) = Complex(1);
      real_part(c, r) = Complex(-1);
      skew.push_back(real_part);
      CMatrix imag_part(size, size);
      imag_part(r, c) = Complex::i();
      imag_part(c, r) = Complex::i();
      skew.push_back(imag_part);
    }
  }
  // H S is skew for Qt whenever S is skew-hermitian (H = H^{-1}); then remove traces.
  std::vector<CMatrix> basis;
  std::optional<CMatrix> reference;
  Rational reference_trace;
  for (const auto& s : skew) {
    CMatrix m = h * s;
    const Complex t = m.trace();
    if (is_zero(t)) {
      basis.push_back(std::move(m));
    } else if (!reference) {
      reference = m;
      reference_trace = t.im;
    } else {
      basis.push_back(m - reference->scaled(Rational(t.im / reference_trace)));
    }
  }
  return basis;
}

std::size_t grade_dimension_g(int n, int k) {
  std::vector<QMatrix> projected;
  for (const auto& b : real_basis_g(n)) projected.push_back(grade_project(b.matrix, k));
  return real_rank(projected);
}

std::size_t grade_dimension_gtilde(int n, int k) {
  std::vector<CMatrix> projected;
  for (const auto& b : real_basis_gtilde(n)) projected.push_back(grade_project(b, k));
  return real_rank(projected);
}

std::size_t solution_space_dimension_g(int n) {
  const std::size_t s = g_size(n);
  const QMatrix h = form_Q(n);
  const std::size_t unknowns = 4 * s * s;
  RMatrix images(unknowns, unknowns);  // row per real unknown, image coordinates along the row
  std::size_t row = 0;
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < s; ++c) {
      for (int b = 0; b < 4; ++b, ++row) {
        QMatrix e(s, s);
        e(r, c) = Quaternion::basis(b);
        const QMatrix img = e.adjoint() * h + h * e;
        std::size_t col = 0;
        for (const auto& q : img.data())
          for (int comp = 0; comp < 4; ++comp) images(row, col++) = q[comp];
      }
    }
  }
  return unknowns - rank(std::move(images));
}

std::vector<BracketRow> bracket_table(int n) {
  const auto basis = real_basis_g(n);
  const auto slots = slot_layout(n);
  std::vector<BracketRow> rows;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const QMatrix br = commutator(basis[i].matrix, basis[j].matrix);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const Quaternion& v = br(slots[s].row, slots[s].col);
        if (!is_zero(v)) rows.push_back({i, j, s, v});
      }
    }
  }
  return rows;
}

QMatrix assemble_bracket(int n, const std::vector<BracketRow>& rows, std::size_t i, std::size_t j) {
  const auto slots = slot_layout(n);
  QMatrix out(g_size(n), g_size(n));
  for (const auto& r : rows) {
    if (r.i != i || r.j != j) continue;
    if (r.slot >= slots.size()) throw std::out_of_range("assemble_bracket: slot index");
    out += single_slot_element(n, slots[r.slot], r.coeff);
  }
  return out;
}

}  // namespace qctw
