#include "qctw/g0_actions.hpp"

#include "qctw/embedding.hpp"

#include <map>
#include <optional>
#include <utility>

namespace qctw {

bool is_unit(const Quaternion& q) { return q.norm2() == 1; }

bool is_symplectic_unitary(const QMatrix& a) {
  return a.square() && a.adjoint() * a == QMatrix::identity(a.rows());
}

G0Element::G0Element(Rational s, Quaternion z, QMatrix a) : s_(std::move(s)), z_(std::move(z)), a_(std::move(a)) {
  if (sgn(s_) <= 0) throw std::invalid_argument("G0Element: s must be positive");
  if (!is_unit(z_)) throw std::invalid_argument("G0Element: z must be a unit quaternion");
  if (!is_symplectic_unitary(a_)) throw std::invalid_argument("G0Element: A must lie in Sp(n)");
}

G0Element G0Element::identity(int n) { return G0Element(Rational(1), Quaternion(1), QMatrix::identity(n)); }

QMatrix G0Element::matrix() const {
  const std::size_t size = a_.rows() + 2;
  QMatrix m(size, size);
  m(0, 0) = s_ * z_;
  m(size - 1, size - 1) = Rational(1 / s_) * z_;
  for (std::size_t r = 0; r < a_.rows(); ++r)
    for (std::size_t c = 0; c < a_.cols(); ++c) m(r + 1, c + 1) = a_(r, c);
  return m;
}

G0Element G0Element::inverse() const { return G0Element(Rational(1 / s_), conj(z_), a_.adjoint()); }

G0Element operator*(const G0Element& g, const G0Element& h) {
  if (g.n() != h.n()) throw std::invalid_argument("G0Element product: size mismatch");
  return G0Element(Rational(g.s_ * h.s_), g.z_ * h.z_, g.a_ * h.a_);
}

bool operator==(const G0Element& g, const G0Element& h) { return equal_mod_sign(g.matrix(), h.matrix()); }

TwistorPoint::TwistorPoint(Quaternion q) : q_(std::move(q)) {
  if (!q_.is_imaginary() || q_.norm2() != 1) throw std::invalid_argument("TwistorPoint: unit imaginary quaternion expected");
}

HVector rho_minus1(const G0Element& g, const HVector& xbar) {
  if (static_cast<int>(xbar.size()) != g.n()) throw std::invalid_argument("rho_minus1: length mismatch");
  const Rational inv_s = 1 / g.s();
  const Quaternion zbar = conj(g.z());
  HVector out(xbar.size());
  for (std::size_t r = 0; r < xbar.size(); ++r) {
    Quaternion acc;
    for (std::size_t c = 0; c < xbar.size(); ++c) acc += g.A()(r, c) * xbar[c];
    out[r] = inv_s * (acc * zbar);
  }
  return out;
}

Quaternion rho_minus2(const G0Element& g, const Quaternion& pbar) {
  if (!pbar.is_imaginary()) throw std::invalid_argument("rho_minus2: imaginary quaternion expected");
  const Rational inv_s2 = 1 / (g.s() * g.s());
  return inv_s2 * (g.z() * pbar * conj(g.z()));
}

TwistorPoint rho_0(const G0Element& g, const TwistorPoint& q) {
  return TwistorPoint(g.z() * q.quaternion() * conj(g.z()));
}

bool in_Ptilde_preimage(const G0Element& g) { return stabilizes_line(Phi(g.matrix())); }

QMatrix ad_conjugate(const G0Element& g, const QMatrix& m) { return g.inverse().matrix() * m * g.matrix(); }

namespace {

constexpr unsigned long kTrialDivisionBound = 10'000'000;

using Gaussian = std::pair<mpz_class, mpz_class>;  // a + b i

Gaussian gaussian_mul(const Gaussian& p, const Gaussian& q) {
  return {p.first * q.first - p.second * q.second, p.first * q.second + p.second * q.first};
}

/// Prime factorization by trial division; nullopt when a composite cofactor
/// beyond the bound remains.
std::optional<std::map<mpz_class, int>> factor(mpz_class m, std::map<mpz_class, int> found = {}) {
  for (unsigned long d = 2; d <= kTrialDivisionBound; d += (d == 2 ? 1 : 2)) {
    if (mpz_class(d) * d > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      ++found[mpz_class(d)];
      m /= d;
    }
  }
  if (m > 1) {
    if (mpz_class(kTrialDivisionBound) * kTrialDivisionBound < m && mpz_probab_prime_p(m.get_mpz_t(), 30) == 0)
      return std::nullopt;
    ++found[m];
  }
  return found;
}

/// x^2 + y^2 = p for a prime p = 1 mod 4 (Cornacchia).
Gaussian prime_two_squares(const mpz_class& p) {
  const mpz_class minus_one = p - 1;
  const mpz_class quarter = minus_one / 4;
  mpz_class t;
  for (unsigned long a = 2;; ++a) {
    mpz_powm(t.get_mpz_t(), mpz_class(a).get_mpz_t(), quarter.get_mpz_t(), p.get_mpz_t());
    if (mpz_class(t * t % p) == minus_one) break;
  }
  mpz_class r0 = p, r1 = t;
  while (r1 * r1 > p) {
    const mpz_class r2 = r0 % r1;
    r0 = r1;
    r1 = r2;
  }
  return {r1, sqrt(mpz_class(p - r1 * r1))};
}

/// u^2 + v^2 = num * den, or nullopt when no representation exists (or factoring gives up).
std::optional<Gaussian> two_squares(const mpz_class& num, const mpz_class& den) {
  auto fn = factor(num);
  if (!fn) return std::nullopt;
  auto f = factor(den, *fn);
  if (!f) return std::nullopt;
  Gaussian acc{1, 0};
  for (const auto& [p, e] : *f) {
    Gaussian base;
    int times = e;
    if (p == 2) {
      base = {1, 1};
    } else if (p % 4 == 3) {
      if (e % 2 == 1) return std::nullopt;
      base = {p, 0};
      times = e / 2;
    } else {
      base = prime_two_squares(p);
    }
    for (int k = 0; k < times; ++k) acc = gaussian_mul(acc, base);
  }
  return acc;
}

}  // namespace

std::optional<Quaternion> solve_zI(const TwistorPoint& target) {
  const Rational& a1 = target.coefficient(1);
  const Rational& a2 = target.coefficient(2);
  const Rational& a3 = target.coefficient(3);
  if (a1 == 1) return Quaternion(1);
  if (a1 == -1) return Quaternion::unit_j();

  // w0 = 1 - I i is a (non-unit) solution: w0 i conj(w0) = |w0|^2 I, |w0|^2 = 2(1 + a1).
  // Any other solution is w0 c with c complex, so we need |w0 c| rational.
  const Quaternion w0(Rational(1 + a1), Rational(0), Rational(-a3), a2);
  const Rational r = w0.norm2();
  const mpz_class num = r.get_num();
  const mpz_class den = r.get_den();
  const auto uv = two_squares(num, den);
  if (!uv) return std::nullopt;
  const Quaternion c(Rational(uv->first), Rational(uv->second), Rational(0), Rational(0));
  // |w0|^2 |c|^2 = (num/den)(num den) = num^2
  return Rational(Rational(1) / Rational(num)) * (w0 * c);
}

}  // namespace qctw
