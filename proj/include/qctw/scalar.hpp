#pragma once

// Exact scalar tower: rationals, complex numbers over a real field, quaternions.
//
// Quaternions are split as q = q_u + j q_v with q_u, q_v complex (i-subfield).
// Since j c = conj(c) j for complex c, q = w + xi + yj + zk gives
//   q_u = w + x i,   q_v = y - z i.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qctw {

using Rational = mpq_class;

/// Canonical rational num/den.
inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double d) { return d == 0.0; }
inline Rational conj(const Rational& r) { return r; }
inline double conj(double d) { return d; }
inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double d) { return d; }
inline std::string to_string(const Rational& r) { return r.get_str(); }

template <class T>
struct BasicComplex {
  T re{0};
  T im{0};

  BasicComplex() = default;
  BasicComplex(T r) : re(std::move(r)), im(0) {}  // NOLINT: implicit real embedding
  BasicComplex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static BasicComplex i() { return {T(0), T(1)}; }

  BasicComplex operator-() const { return {T(-re), T(-im)}; }
  BasicComplex& operator+=(const BasicComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BasicComplex& operator-=(const BasicComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend BasicComplex operator+(BasicComplex a, const BasicComplex& b) { return a += b; }
  friend BasicComplex operator-(BasicComplex a, const BasicComplex& b) { return a -= b; }
  friend BasicComplex operator*(const BasicComplex& a, const BasicComplex& b) {
    return {T(a.re * b.re - a.im * b.im), T(a.re * b.im + a.im * b.re)};
  }
  BasicComplex& operator*=(const BasicComplex& o) { return *this = *this * o; }
  friend BasicComplex operator*(const T& s, const BasicComplex& a) { return {T(s * a.re), T(s * a.im)}; }
  friend bool operator==(const BasicComplex& a, const BasicComplex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const BasicComplex& a, const BasicComplex& b) { return !(a == b); }

  T norm2() const { return T(re * re + im * im); }
  BasicComplex inverse() const {
    T d = norm2();
    if (is_zero(d)) throw std::domain_error("complex inverse of zero");
    return {T(re / d), T(-im / d)};
  }
  friend BasicComplex operator/(const BasicComplex& a, const BasicComplex& b) { return a * b.inverse(); }
};

template <class T>
BasicComplex<T> conj(const BasicComplex<T>& c) {
  return {c.re, T(-c.im)};
}
template <class T>
bool is_zero(const BasicComplex<T>& c) {
  return is_zero(c.re) && is_zero(c.im);
}

template <class T>
struct BasicQuaternion {
  T w{0}, x{0}, y{0}, z{0};

  BasicQuaternion() = default;
  BasicQuaternion(T r) : w(std::move(r)) {}  // NOLINT: implicit real embedding
  BasicQuaternion(T w_, T x_, T y_, T z_) : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  explicit BasicQuaternion(const BasicComplex<T>& c) : w(c.re), x(c.im) {}

  static BasicQuaternion unit_i() { return {T(0), T(1), T(0), T(0)}; }
  static BasicQuaternion unit_j() { return {T(0), T(0), T(1), T(0)}; }
  static BasicQuaternion unit_k() { return {T(0), T(0), T(0), T(1)}; }
  /// 0 -> 1, 1 -> i, 2 -> j, 3 -> k
  static BasicQuaternion basis(int idx) {
    switch (idx) {
      case 0: return T(1);
      case 1: return unit_i();
      case 2: return unit_j();
      case 3: return unit_k();
      default: throw std::out_of_range("quaternion basis index");
    }
  }

  BasicQuaternion operator-() const { return {T(-w), T(-x), T(-y), T(-z)}; }
  BasicQuaternion& operator+=(const BasicQuaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  BasicQuaternion& operator-=(const BasicQuaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  friend BasicQuaternion operator+(BasicQuaternion a, const BasicQuaternion& b) { return a += b; }
  friend BasicQuaternion operator-(BasicQuaternion a, const BasicQuaternion& b) { return a -= b; }
  friend BasicQuaternion operator*(const BasicQuaternion& a, const BasicQuaternion& b) {
    return {T(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z),
            T(a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y),
            T(a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x),
            T(a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w)};
  }
  BasicQuaternion& operator*=(const BasicQuaternion& o) { return *this = *this * o; }
  friend BasicQuaternion operator*(const T& s, const BasicQuaternion& a) {
    return {T(s * a.w), T(s * a.x), T(s * a.y), T(s * a.z)};
  }
  friend bool operator==(const BasicQuaternion& a, const BasicQuaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const BasicQuaternion& a, const BasicQuaternion& b) { return !(a == b); }

  T norm2() const { return T(w * w + x * x + y * y + z * z); }
  bool is_imaginary() const { return is_zero(w); }
  BasicQuaternion inverse() const {
    T d = norm2();
    if (is_zero(d)) throw std::domain_error("quaternion inverse of zero");
    return {T(w / d), T(-x / d), T(-y / d), T(-z / d)};
  }
  const T& operator[](int idx) const {
    switch (idx) {
      case 0: return w;
      case 1: return x;
      case 2: return y;
      case 3: return z;
      default: throw std::out_of_range("quaternion component");
    }
  }
  T& operator[](int idx) { return const_cast<T&>(std::as_const(*this)[idx]); }
};

template <class T>
BasicQuaternion<T> conj(const BasicQuaternion<T>& q) {
  return {q.w, T(-q.x), T(-q.y), T(-q.z)};
}
template <class T>
bool is_zero(const BasicQuaternion<T>& q) {
  return is_zero(q.w) && is_zero(q.x) && is_zero(q.y) && is_zero(q.z);
}

/// q -> (q_u, q_v) with q = q_u + j q_v.
template <class T>
std::pair<BasicComplex<T>, BasicComplex<T>> split_complex(const BasicQuaternion<T>& q) {
  return {BasicComplex<T>(q.w, q.x), BasicComplex<T>(q.y, T(-q.z))};
}

/// Inverse of split_complex: u + j v.
template <class T>
BasicQuaternion<T> join_complex(const BasicComplex<T>& u, const BasicComplex<T>& v) {
  return {u.re, u.im, v.re, T(-v.im)};
}

using Complex = BasicComplex<Rational>;
using Quaternion = BasicQuaternion<Rational>;
using HVector = std::vector<Quaternion>;
using CVector = std::vector<Complex>;

/// y + j z in H^{m} -> (y, z) in C^{2m}, y first.
CVector identify_vector(const HVector& v);
/// Inverse of identify_vector; length must be even.
HVector unidentify_vector(const CVector& v);

std::string to_string(const Complex& c);
std::string to_string(const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Complex& c);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qctw
