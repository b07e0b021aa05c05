#pragma once

// Coordinate geometry of the twistor space Z = (H^n x Im H) x S^2 of the flat model,
// generic over the scalar field (exact rationals or doubles).
//
// A chart point is (x_0..x_{4n-1}, t_1, t_2, t_3, s_1, s_2): x are the real
// coordinates of the quaternion vector x (block b holds x_b = x_{4b} + x_{4b+1} i + ...),
// t the Im H coordinates, s a stereographic coordinate of the fibre point
//   chart 0:  I = (1 - |s|^2, 2 s_1, 2 s_2) / (1 + |s|^2)    (|s| small near  i)
//   chart 1:  I = (|s|^2 - 1, 2 s_1, 2 s_2) / (1 + |s|^2)    (|s| small near -i)
// The contact forms are eta^a = dt_a + <i_a x, dx>. Horizontal lifts use the flat
// connection, so the fibre coordinates are untouched by lifting and
//   H = span{X_q} + span{xi_u : u tangent to S^2 at I} + span{d/ds_1, d/ds_2},
//   X_q = d/dx_q - sum_a (i_a x)_q d/dt_a,   xi_u = sum_a u_a d/dt_a.
// J acts by left multiplication by I on D, by u -> I x u on the Reeb part and on
// the fibre tangent.

#include "qctw/scalar.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qctw::twistor {

template <class T>
using Vec = std::vector<T>;
template <class T>
using Vec3 = std::array<T, 3>;

inline std::size_t dimension(int n) { return static_cast<std::size_t>(4 * n + 5); }
inline std::size_t h_rank(int n) { return static_cast<std::size_t>(4 * n + 4); }
inline std::size_t t_offset(int n) { return static_cast<std::size_t>(4 * n); }
inline std::size_t s_offset(int n) { return static_cast<std::size_t>(4 * n + 3); }

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {T(a[1] * b[2] - a[2] * b[1]), T(a[2] * b[0] - a[0] * b[2]), T(a[0] * b[1] - a[1] * b[0])};
}

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return T(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
}

template <class T>
Vec3<T> fiber_point(int chart, const T& s1, const T& s2) {
  const T r2 = s1 * s1 + s2 * s2;
  const T d = T(1) + r2;
  const T first = chart == 0 ? T(T(1) - r2) : T(r2 - T(1));
  return {T(first / d), T(T(2) * s1 / d), T(T(2) * s2 / d)};
}

/// dI/ds_1, dI/ds_2.
template <class T>
std::array<Vec3<T>, 2> fiber_tangents(int chart, const T& s1, const T& s2) {
  const T d = T(1) + s1 * s1 + s2 * s2;
  const Vec3<T> p = fiber_point(chart, s1, s2);
  const T sign = chart == 0 ? T(-1) : T(1);
  const std::array<Vec3<T>, 2> dnum = {Vec3<T>{T(sign * 2 * s1), T(2), T(0)}, Vec3<T>{T(sign * 2 * s2), T(0), T(2)}};
  const std::array<T, 2> s = {s1, s2};
  std::array<Vec3<T>, 2> out;
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 3; ++c) out[b][c] = T((dnum[b][c] - p[c] * T(2) * s[b]) / d);
  return out;
}

/// Inverse of fiber_point. Throws at the pole the chart misses.
template <class T>
std::array<T, 2> fiber_chart_coordinates(int chart, const Vec3<T>& a) {
  const T d = chart == 0 ? T(T(1) + a[0]) : T(T(1) - a[0]);
  if (is_zero(d)) throw std::domain_error("fiber_chart_coordinates: pole outside the chart");
  return {T(a[1] / d), T(a[2] / d)};
}

/// Chart covering I with |s| <= 1.
template <class T>
int preferred_chart(const Vec3<T>& a) {
  return a[0] >= T(0) ? 0 : 1;
}

/// Coefficients of w in span{u_1, u_2} (least squares via the Gram matrix).
template <class T>
std::array<T, 2> solve_span(const std::array<Vec3<T>, 2>& u, const Vec3<T>& w) {
  const T g00 = dot(u[0], u[0]), g01 = dot(u[0], u[1]), g11 = dot(u[1], u[1]);
  const T b0 = dot(u[0], w), b1 = dot(u[1], w);
  const T det = g00 * g11 - g01 * g01;
  if (is_zero(det)) throw std::domain_error("solve_span: degenerate tangent frame");
  return {T((g11 * b0 - g01 * b1) / det), T((g00 * b1 - g01 * b0) / det)};
}

/// Left multiplication of every quaternion block of x by q.
template <class T>
Vec<T> left_multiply(const BasicQuaternion<T>& q, const Vec<T>& x, std::size_t blocks) {
  Vec<T> out(4 * blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const BasicQuaternion<T> xb(x[4 * b], x[4 * b + 1], x[4 * b + 2], x[4 * b + 3]);
    const BasicQuaternion<T> y = q * xb;
    out[4 * b] = y.w;
    out[4 * b + 1] = y.x;
    out[4 * b + 2] = y.y;
    out[4 * b + 3] = y.z;
  }
  return out;
}

template <class T>
BasicQuaternion<T> imaginary(const Vec3<T>& a) {
  return {T(0), a[0], a[1], a[2]};
}

/// Geometry at one chart point.
template <class T>
class ChartPoint {
 public:
  ChartPoint(int n, int chart, Vec<T> coords) : n_(n), chart_(chart), p_(std::move(coords)) {
    if (n < 1) throw std::invalid_argument("ChartPoint: n >= 1 required");
    if (chart != 0 && chart != 1) throw std::invalid_argument("ChartPoint: chart is 0 or 1");
    if (p_.size() != dimension(n)) throw std::invalid_argument("ChartPoint: coordinate count");
    const T& s1 = p_[s_offset(n)];
    const T& s2 = p_[s_offset(n) + 1];
    I_ = fiber_point(chart, s1, s2);
    u_ = fiber_tangents(chart, s1, s2);
    x_ = Vec<T>(p_.begin(), p_.begin() + 4 * n);
    for (int a = 0; a < 3; ++a) ix_[a] = left_multiply(BasicQuaternion<T>::basis(a + 1), x_, n_);
  }

  int n() const { return n_; }
  int chart() const { return chart_; }
  const Vec<T>& coordinates() const { return p_; }
  const Vec3<T>& fiber() const { return I_; }
  const std::array<Vec3<T>, 2>& fiber_tangent() const { return u_; }

  /// (eta^1(v), eta^2(v), eta^3(v)).
  Vec3<T> eta(const Vec<T>& v) const {
    Vec3<T> r;
    for (int a = 0; a < 3; ++a) {
      T s = v[t_offset(n_) + a];
      for (std::size_t q = 0; q < x_.size(); ++q) s += ix_[a][q] * v[q];
      r[a] = s;
    }
    return r;
  }

  /// Components of theta = sum_a I_a eta^a.
  Vec<T> theta() const {
    Vec<T> th(dimension(n_), T(0));
    for (int a = 0; a < 3; ++a) {
      for (std::size_t q = 0; q < x_.size(); ++q) th[q] += I_[a] * ix_[a][q];
      th[t_offset(n_) + a] = I_[a];
    }
    return th;
  }

  T theta(const Vec<T>& v) const { return dot(I_, eta(v)); }

  /// xi_I.
  Vec<T> reeb() const { return reeb_along(I_); }

  Vec<T> reeb_along(const Vec3<T>& r) const {
    Vec<T> v(dimension(n_), T(0));
    for (int a = 0; a < 3; ++a) v[t_offset(n_) + a] = r[a];
    return v;
  }

  /// Frame of H: X_0..X_{4n-1}, xi_{u_1}, xi_{u_2}, d/ds_1, d/ds_2.
  Vec<T> frame(std::size_t alpha) const {
    const std::size_t dim = dimension(n_);
    const std::size_t four_n = x_.size();
    Vec<T> v(dim, T(0));
    if (alpha < four_n) {
      v[alpha] = T(1);
      for (int a = 0; a < 3; ++a) v[t_offset(n_) + a] = T(-ix_[a][alpha]);
    } else if (alpha < four_n + 2) {
      v = reeb_along(u_[alpha - four_n]);
    } else if (alpha < four_n + 4) {
      v[s_offset(n_) + (alpha - four_n - 2)] = T(1);
    } else {
      throw std::out_of_range("ChartPoint::frame");
    }
    return v;
  }

  /// Coefficients of v in the frame of H (the xi_I component of v is dropped).
  Vec<T> frame_coordinates(const Vec<T>& v) const {
    const std::size_t four_n = x_.size();
    Vec<T> c(h_rank(n_));
    for (std::size_t q = 0; q < four_n; ++q) c[q] = v[q];
    const auto r = solve_span(u_, eta(v));
    c[four_n] = r[0];
    c[four_n + 1] = r[1];
    c[four_n + 2] = v[s_offset(n_)];
    c[four_n + 3] = v[s_offset(n_) + 1];
    return c;
  }

  /// v - theta(v) xi_I.
  Vec<T> project_to_h(const Vec<T>& v) const {
    Vec<T> out = v;
    const T th = theta(v);
    for (int a = 0; a < 3; ++a) out[t_offset(n_) + a] -= th * I_[a];
    return out;
  }

  /// Fibre part of v as a tangent vector of S^2 in R^3.
  Vec3<T> vertical(const Vec<T>& v) const {
    const T& d1 = v[s_offset(n_)];
    const T& d2 = v[s_offset(n_) + 1];
    return {T(u_[0][0] * d1 + u_[1][0] * d2), T(u_[0][1] * d1 + u_[1][1] * d2), T(u_[0][2] * d1 + u_[1][2] * d2)};
  }

  /// J applied to v in H. Components of v along xi_I are ignored.
  Vec<T> apply_J(const Vec<T>& v) const {
    const std::size_t four_n = x_.size();
    const Vec<T> c(v.begin(), v.begin() + four_n);
    const Vec<T> jc = left_multiply(imaginary(I_), c, n_);
    const Vec3<T> jr = cross(I_, eta(v));
    const auto js = solve_span(u_, cross(I_, vertical(v)));
    Vec<T> out(dimension(n_), T(0));
    for (std::size_t q = 0; q < four_n; ++q) out[q] = jc[q];
    for (int a = 0; a < 3; ++a) {
      T s = jr[a];
      for (std::size_t q = 0; q < four_n; ++q) s -= ix_[a][q] * jc[q];
      out[t_offset(n_) + a] = s;
    }
    out[s_offset(n_)] = js[0];
    out[s_offset(n_) + 1] = js[1];
    return out;
  }

  /// Chart-independent description (x, t, fibre tangent in R^3) of a tangent vector.
  Vec<T> geometric(const Vec<T>& v) const {
    Vec<T> out(v.begin(), v.begin() + s_offset(n_));
    const Vec3<T> w = vertical(v);
    out.insert(out.end(), w.begin(), w.end());
    return out;
  }

  /// Inverse of geometric(); the fibre part must be tangent to S^2 at I.
  Vec<T> from_geometric(const Vec<T>& g) const {
    Vec<T> out(g.begin(), g.begin() + s_offset(n_));
    const Vec3<T> w = {g[s_offset(n_)], g[s_offset(n_) + 1], g[s_offset(n_) + 2]};
    const auto s = solve_span(u_, w);
    out.push_back(s[0]);
    out.push_back(s[1]);
    return out;
  }

 private:
  int n_;
  int chart_;
  Vec<T> p_;
  Vec<T> x_;
  Vec3<T> I_;
  std::array<Vec3<T>, 2> u_;
  std::array<Vec<T>, 3> ix_;
};

}  // namespace qctw::twistor
