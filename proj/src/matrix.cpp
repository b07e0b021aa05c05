#include "qctw/matrix.hpp"

#include <utility>

namespace qctw {

std::size_t rank(RMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

namespace {

void push_real(std::vector<Rational>& out, const Quaternion& q) {
  for (int c = 0; c < 4; ++c) out.push_back(q[c]);
}
void push_real(std::vector<Rational>& out, const Complex& z) {
  out.push_back(z.re);
  out.push_back(z.im);
}

template <class T>
std::size_t real_rank_impl(const std::vector<Matrix<T>>& family) {
  if (family.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(family.size());
  for (const auto& m : family) {
    std::vector<Rational> coords;
    for (const auto& e : m.data()) push_real(coords, e);
    rows.push_back(std::move(coords));
  }
  RMatrix a(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != a.cols()) throw std::invalid_argument("real_rank: mixed shapes");
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = rows[i][j];
  }
  return rank(std::move(a));
}

}  // namespace

std::size_t real_rank(const std::vector<QMatrix>& family) { return real_rank_impl(family); }
std::size_t real_rank(const std::vector<CMatrix>& family) { return real_rank_impl(family); }

}  // namespace qctw
