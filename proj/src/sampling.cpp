#include "qctw/sampling.hpp"

namespace qctw {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ fnv1a(stream)) + index);
}

Rational Sampler::rational() { return rat(integer(-9, 9), integer(1, 6)); }
Complex Sampler::complex() { return {rational(), rational()}; }
Quaternion Sampler::quaternion() { return {rational(), rational(), rational(), rational()}; }
Quaternion Sampler::imaginary_quaternion() { return {Rational(0), rational(), rational(), rational()}; }

HVector Sampler::hvector(int n) {
  HVector v(n);
  for (auto& q : v) q = quaternion();
  return v;
}

Quaternion Sampler::unit_quaternion() {
  // (1 + v)^2 / |1 + v|^2 with v imaginary.
  const Quaternion v = imaginary_quaternion();
  const Quaternion one_plus = Quaternion(1) + v;
  Quaternion z = Rational(1 / one_plus.norm2()) * (one_plus * one_plus);
  return coin() ? z : -z;
}

Quaternion Sampler::u1_element() {
  const Rational t = rational();
  const Rational d = 1 + t * t;
  Quaternion z(Rational((1 - t * t) / d), Rational(2 * t / d), Rational(0), Rational(0));
  return coin() ? z : -z;
}

QMatrix Sampler::sp_n(int n) {
  QMatrix a = QMatrix::identity(n);
  const int rounds = 2;
  for (int round = 0; round < rounds; ++round) {
    QMatrix diag(n, n);
    for (int r = 0; r < n; ++r) diag(r, r) = unit_quaternion();
    a = diag * a;
    if (n < 2) continue;
    const int p = static_cast<int>(integer(0, n - 1));
    int q = static_cast<int>(integer(0, n - 2));
    if (q >= p) ++q;
    const Rational t = rational();
    const Rational d = 1 + t * t;
    const Rational c = (1 - t * t) / d;
    const Rational s = 2 * t / d;
    QMatrix rot = QMatrix::identity(n);
    rot(p, p) = c;
    rot(q, q) = c;
    rot(p, q) = Rational(-s);
    rot(q, p) = s;
    a = rot * a;
  }
  return a;
}

Rational Sampler::positive_rational() { return rat(integer(1, 9), integer(1, 6)); }

G0Element Sampler::g0(int n) { return G0Element(positive_rational(), unit_quaternion(), sp_n(n)); }

G0Element Sampler::sp1spn(int n, bool force_u1) {
  return G0Element(Rational(1), force_u1 ? u1_element() : unit_quaternion(), sp_n(n));
}

TwistorPoint Sampler::twistor_point() {
  const Quaternion z = unit_quaternion();
  return TwistorPoint(z * Quaternion::unit_i() * conj(z));
}

QMatrix Sampler::sp_n_algebra(int n) {
  QMatrix b(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) b(r, c) = quaternion();
  return b - b.adjoint();
}

QMatrix Sampler::g_element(int n, int lo, int hi) {
  SpSlots s;
  s.A0 = QMatrix(n, n);
  s.xbar.assign(n, Quaternion());
  s.z.assign(n, Quaternion());
  auto want = [lo, hi](int k) { return lo <= k && k <= hi; };
  if (want(-2)) s.pbar = imaginary_quaternion();
  if (want(-1)) s.xbar = hvector(n);
  if (want(0)) {
    s.a = quaternion();
    s.A0 = sp_n_algebra(n);
  }
  if (want(1)) s.z = hvector(n);
  if (want(2)) s.q = imaginary_quaternion();
  return from_slots(s);
}

}  // namespace qctw
