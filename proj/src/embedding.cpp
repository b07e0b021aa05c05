#include "qctw/embedding.hpp"

#include "qctw/sampling.hpp"

#include <sstream>

namespace qctw {

bool Row4::is_zero() const {
  for (const auto& c : y)
    if (!qctw::is_zero(c)) return false;
  for (const auto& c : z)
    if (!qctw::is_zero(c)) return false;
  return qctw::is_zero(z_minus) && qctw::is_zero(z_plus);
}

Row4 operator+(const Row4& a, const Row4& b) {
  if (a.n() != b.n()) throw std::invalid_argument("Row4 sum: size mismatch");
  Row4 r = a;
  for (int i = 0; i < a.n(); ++i) {
    r.y[i] += b.y[i];
    r.z[i] += b.z[i];
  }
  r.z_minus += b.z_minus;
  r.z_plus += b.z_plus;
  return r;
}

Row4 operator-(const Row4& a) {
  Row4 r = a;
  for (auto& c : r.y) c = -c;
  for (auto& c : r.z) c = -c;
  r.z_minus = -r.z_minus;
  r.z_plus = -r.z_plus;
  return r;
}

std::string to_string(const Row4& r) {
  std::ostringstream os;
  auto vec = [&os](const CVector& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
    os << ']';
  };
  os << '(';
  vec(r.y);
  os << ", " << to_string(r.z_minus) << ", ";
  vec(r.z);
  os << ", " << to_string(r.z_plus) << ')';
  return os.str();
}

CMatrix phi(const QMatrix& m) {
  const std::size_t s = m.rows();
  if (!m.square()) throw std::invalid_argument("phi: square matrix expected");
  CMatrix out(2 * s, 2 * s);
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < s; ++c) {
      auto [u, v] = split_complex(m(r, c));
      out(r, c) = u;
      out(r, s + c) = -conj(v);
      out(s + r, c) = v;
      out(s + r, s + c) = conj(u);
    }
  }
  return out;
}

bool equal_mod_sign(const CMatrix& a, const CMatrix& b) { return a == b || a == -b; }
bool equal_mod_sign(const QMatrix& a, const QMatrix& b) { return a == b || a == -b; }

// Coordinates: y_i -> i, z_i -> half + i, half = n + 2.
CMatrix row4_to_matrix(const Row4& r) {
  const int n = r.n();
  if (static_cast<int>(r.z.size()) != n) throw std::invalid_argument("Row4: y and z lengths differ");
  const std::size_t half = g_size(n);
  const std::size_t ylast = half - 1;
  const std::size_t zfirst = half;
  const std::size_t zlast = 2 * half - 1;
  CMatrix m(2 * half, 2 * half);
  for (int a = 1; a <= n; ++a) {
    m(a, 0) = r.y[a - 1];
    m(ylast, a) = -conj(r.y[a - 1]);
    m(zfirst + a, 0) = r.z[a - 1];
    m(ylast, zfirst + a) = -conj(r.z[a - 1]);
  }
  m(zfirst, 0) = r.z_minus;
  m(zlast, 0) = r.z_plus;
  m(ylast, zfirst) = -conj(r.z_plus);
  m(ylast, zlast) = -conj(r.z_minus);
  return m;
}

Row4 row4_from_matrix(const CMatrix& m) {
  const int n = n_of(m);
  const std::size_t half = g_size(n);
  Row4 r = Row4::zero(n);
  for (int a = 1; a <= n; ++a) {
    r.y[a - 1] = m(a, 0);
    r.z[a - 1] = m(half + a, 0);
  }
  r.z_minus = m(half, 0);
  r.z_plus = m(2 * half - 1, 0);
  if (row4_to_matrix(r) != m) throw std::invalid_argument("matrix is not of gt_{-1} shape");
  return r;
}

Row4 phi_minus1(const QMatrix& m) {
  const int n = n_of(m);
  const std::size_t last = g_size(n) - 1;
  Row4 r = Row4::zero(n);
  // [pbar]_{-2}: p = conj(entry)
  const Quaternion p = conj(m(last, 0));
  r.z_plus = -split_complex(p).second;
  // [xbar]_{-1}: x = conj(entry)
  for (int a = 1; a <= n; ++a) {
    auto [xu, xv] = split_complex(conj(m(a, 0)));
    r.y[a - 1] = conj(xu);
    r.z[a - 1] = -xv;
  }
  // [(a, A0)]_0
  r.z_minus = split_complex(m(0, 0)).second;
  return r;
}

Row4 phi_minus1_projected(const QMatrix& m) { return row4_from_matrix(grade_project(phi(m), -1)); }

FiltrationReport filtration_compat_check(int n, std::size_t trials, std::uint64_t seed, const PhiMap& map) {
  FiltrationReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Sampler rng(derive_seed(seed, "filtration", t));
    const QMatrix nil = rng.g_element(n, 1, 2);
    if (filtration_degree(map(nil)) < 0) report.failures.push_back({"phi(p+) in pt", nil});

    const QMatrix low = rng.g_element(n, -1, 2);
    if (filtration_degree(map(low)) < -1) report.failures.push_back({"phi(g^-1) in gt^-1", low});

    // Mixed sample: parabolic part always, lower grades switched on at random, and a_v
    // killed half the time so that phi(M) in pt actually occurs.
    QMatrix mixed = rng.g_element(n, 0, 2);
    if (rng.coin()) mixed += rng.g_element(n, -2, -1);
    if (rng.coin()) {
      Quaternion& a = mixed(0, 0);
      const std::size_t last = g_size(n) - 1;
      a.y = 0;
      a.z = 0;
      mixed(last, last) = -conj(a);
    }
    if (filtration_degree(map(mixed)) >= 0) {
      ++report.preimage_hits;
      if (filtration_degree(mixed) < 0) report.failures.push_back({"phi^-1(pt) in p", mixed});
    }
  }
  return report;
}

}  // namespace qctw
