#include "qctw/correspondence.hpp"

#include "qctw/parallel.hpp"
#include "qctw/sampling.hpp"

#include <array>

namespace qctw {

Row4 omega_value_reeb(ReebDirection direction, const ScaleParams& scale, const G0Element& g_I, const QMatrix& omega_A) {
  const int n = g_I.n();
  const Quaternion unit = direction == ReebDirection::J ? Quaternion::unit_j() : Quaternion::unit_k();
  const Quaternion rotated = g_I.z() * unit * conj(g_I.z());
  // Values at u: the g_{-2} part from omega_{-2}, the g_0 part from the Weyl connection.
  const QMatrix at_u = make_g_minus2(n, -rotated) + make_g_zero(scale.s_tilde * rotated, omega_A);
  return phi_minus1_projected(ad_conjugate(g_I, at_u));
}

Row4 omega_value_reeb(ReebDirection direction, const ScaleParams& scale, const Quaternion& z_I, int n) {
  return omega_value_reeb(direction, scale, G0Element(Rational(1), z_I, QMatrix::identity(n)), QMatrix(n, n));
}

Row4 j0(const Row4& v) {
  const Complex minus_i(Rational(0), Rational(-1));
  Row4 r = v;
  for (auto& c : r.y) c = minus_i * c;
  for (auto& c : r.z) c = minus_i * c;
  r.z_minus = minus_i * r.z_minus;
  r.z_plus = minus_i * r.z_plus;
  return r;
}

TwistorFrame twistor_frame(const Quaternion& z) {
  const Quaternion zc = conj(z);
  return {z * Quaternion::unit_i() * zc, z * Quaternion::unit_j() * zc, z * Quaternion::unit_k() * zc};
}

namespace {

Rational dot(const Quaternion& a, const Quaternion& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Quaternion cross(const Quaternion& a, const Quaternion& b) {
  return {Rational(0), Rational(a.y * b.z - a.z * b.y), Rational(a.z * b.x - a.x * b.z), Rational(a.x * b.y - a.y * b.x)};
}

}  // namespace

bool is_oriented_orthonormal(const TwistorFrame& f) {
  const std::array<const Quaternion*, 3> v{&f.I, &f.J, &f.K};
  for (int a = 0; a < 3; ++a) {
    if (!v[a]->is_imaginary()) return false;
    for (int b = 0; b < 3; ++b)
      if (dot(*v[a], *v[b]) != (a == b ? 1 : 0)) return false;
  }
  return f.K == f.I * f.J && f.K == cross(f.I, f.J);
}

CheckReport vertical_map_check(int n) {
  CheckReport report{"correspondence.vertical_map", "J0 on fundamental fields of [(j,0)]_0, [(k,0)]_0"};
  report.trials = 1;
  const Row4 vj = phi_minus1(make_g_zero(n, Quaternion::unit_j()));
  const Row4 vk = phi_minus1(make_g_zero(n, Quaternion::unit_k()));
  const Row4 vi = phi_minus1(make_g_zero(n, Quaternion::unit_i()));
  Row4 expect_j = Row4::zero(n);
  expect_j.z_minus = Complex(1);
  Row4 expect_k = Row4::zero(n);
  expect_k.z_minus = Complex(Rational(0), Rational(-1));
  report.fail_unless(vj == expect_j, "phi_-1[(j,0)]_0 = " + to_string(vj));
  report.fail_unless(vk == expect_k, "phi_-1[(k,0)]_0 = " + to_string(vk));
  report.fail_unless(vi.is_zero(), "phi_-1[(i,0)]_0 = " + to_string(vi));
  report.fail_unless(j0(vj) == vk, "J0 phi_-1[(j,0)]_0 = " + to_string(j0(vj)));
  report.fail_unless(j0(vk) == -vj, "J0 phi_-1[(k,0)]_0 = " + to_string(j0(vk)));
  return report;
}

namespace {

HVector right_multiply(const HVector& v, const Quaternion& q) {
  HVector out(v.size());
  for (std::size_t a = 0; a < v.size(); ++a) out[a] = v[a] * q;
  return out;
}

std::string describe(const HVector& v) {
  std::string s = "[";
  for (std::size_t a = 0; a < v.size(); ++a) s += (a ? ", " : "") + to_string(v[a]);
  return s + "]";
}

}  // namespace

CheckReport horizontal_map_check(int n, std::size_t samples, std::uint64_t seed) {
  CheckReport report{"correspondence.horizontal_map", "J0 phi_-1[xbar]_-1 = phi_-1[xbar ibar]_-1 and frame change by g_I"};
  const Quaternion ibar = conj(Quaternion::unit_i());
  run_trials(report, samples, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, report.name, t));
    const HVector xbar = rng.hvector(n);
    if (j0(phi_minus1(make_g_minus1(xbar))) != phi_minus1(make_g_minus1(right_multiply(xbar, ibar))))
      return "C-linearity fails for xbar = " + describe(xbar);

    // At I = z i conj z the frame u g_I sees I(X) as [u g_I]_{-1}(X) ibar.
    const G0Element g = rng.sp1spn(n);
    const G0Element g_inv = g.inverse();
    const Quaternion I_bar = conj(g.z() * Quaternion::unit_i() * conj(g.z()));
    const HVector moved = rho_minus1(g_inv, xbar);
    const HVector moved_IX = rho_minus1(g_inv, right_multiply(xbar, I_bar));
    if (moved_IX != right_multiply(moved, ibar)) return "frame change fails for xbar = " + describe(xbar);
    if (j0(phi_minus1(make_g_minus1(moved))) != phi_minus1(make_g_minus1(moved_IX)))
      return "J0 differs from I on D at z = " + to_string(g.z());
    return std::nullopt;
  });
  return report;
}

CheckReport identification_audit(int n, std::size_t samples, std::uint64_t seed) {
  CheckReport report{"correspondence.identification", "Sp(1)Sp(n) orbit of i has stabiliser U(1)Sp(n); right action; dims"};

  // Dimension count: rank Dt = dim gt_{-1} = 4n+4, dim Mt = dim gt/pt = 4n+5 = dim Z.
  const std::size_t dim_m1 = grade_dimension_gtilde(n, -1);
  const std::size_t dim_m2 = grade_dimension_gtilde(n, -2);
  const std::size_t twistor_dim = (4 * n + 3) + 2;
  report.fail_unless(dim_m1 == std::size_t(4 * n + 4), "dim gt_-1 = " + std::to_string(dim_m1));
  report.fail_unless(dim_m1 + dim_m2 == std::size_t(4 * n + 5), "dim gt/pt = " + std::to_string(dim_m1 + dim_m2));
  report.fail_unless(dim_m1 + dim_m2 == twistor_dim, "dim Z = " + std::to_string(twistor_dim));
  report.trials = 1;

  const TwistorPoint i_point = TwistorPoint::i();
  run_trials(report, samples, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, report.name, t));
    const G0Element g = rng.sp1spn(n, t % 2 == 0);
    const bool in_u1 = is_zero(g.z().y) && is_zero(g.z().z);
    const bool fixes_i = rho_0(g, i_point) == i_point;
    if (in_u1 != fixes_i) return "orbit fibre mismatch at z = " + to_string(g.z());
    if (in_u1 != in_Ptilde_preimage(g)) return "Phi^-1(Pt) mismatch at z = " + to_string(g.z());

    // (u, q).g = (u g, rho_0(g^-1) q) is a right action and preserves rho_0(u) q.
    const G0Element u = rng.sp1spn(n);
    const G0Element h = rng.sp1spn(n);
    const TwistorPoint q = rng.twistor_point();
    auto act = [](const std::pair<G0Element, TwistorPoint>& p, const G0Element& k) {
      return std::make_pair(p.first * k, rho_0(k.inverse(), p.second));
    };
    const auto start = std::make_pair(u, q);
    const auto lhs = act(act(start, g), h);
    const auto rhs = act(start, g * h);
    if (!(lhs.first == rhs.first) || !(lhs.second == rhs.second)) return "not a right action at z = " + to_string(g.z());
    if (!(rho_0(lhs.first, lhs.second) == rho_0(u, q))) return "identification not invariant at z = " + to_string(g.z());
    return std::nullopt;
  });
  return report;
}

}  // namespace qctw
