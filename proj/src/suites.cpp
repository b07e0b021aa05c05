#include "qctw/suites.hpp"

#include "qctw/parallel.hpp"
#include "qctw/sampling.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qctw {

using ordered_json = nlohmann::ordered_json;

void SuiteConfig::validate() const {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("n must lie in 1.." + std::to_string(kMaxN));
  if (!(model.fd_step > 0) || !(model.residual_tol > 0) || !(model.eig_floor > 0))
    throw std::invalid_argument("tolerances must be positive");
}

std::size_t SuiteResult::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const CheckReport& c) { return c.status == s; }));
}

const CheckReport* SuiteResult::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

Row4 tuple(int n, const Complex& z_minus, const Complex& z_plus) {
  Row4 r = Row4::zero(n);
  r.z_minus = z_minus;
  r.z_plus = z_plus;
  return r;
}

RMatrix minus_identity(std::size_t k) { return RMatrix::identity(k).scaled(Rational(-1)); }

}  // namespace

namespace checks {

// --- graded_lie ----------------------------------------------------------------------

CheckReport grading_structure(int n) {
  CheckReport r{"graded_lie.structure", "block form of sp(Q), |2|-grading, grading elements, component dimensions"};
  r.trials = 1;
  const std::size_t dim = static_cast<std::size_t>((n + 2) * (2 * n + 5));
  r.fail_unless(in_algebra(grading_element(n), n), "E not in g");
  r.fail_unless(in_algebra(grading_element_tilde(n), n), "Et not in gt");
  r.fail_unless(!in_algebra(QMatrix::identity(g_size(n)), n), "Id in g");
  r.fail_unless(grade_dimension_g(n, -2) == 3 && grade_dimension_g(n, 2) == 3, "dim g_{+-2} != 3");
  r.fail_unless(grade_dimension_g(n, -1) == std::size_t(4 * n) && grade_dimension_g(n, 1) == std::size_t(4 * n),
                "dim g_{+-1} != 4n");
  r.fail_unless(grade_dimension_gtilde(n, -1) == std::size_t(4 * n + 4), "dim gt_-1 != 4n+4");
  r.fail_unless(grade_dimension_gtilde(n, -2) == 1, "dim gt_-2 != 1");
  std::size_t total = 0;
  for (int k = kMinGrade; k <= kMaxGrade; ++k) total += grade_dimension_g(n, k);
  r.fail_unless(total == dim, "sum of grade dimensions = " + std::to_string(total));
  r.fail_unless(solution_space_dimension_g(n) == dim, "dim {M : M*H + HM = 0} != (n+2)(2n+5)");

  const auto basis = real_basis_g(n);
  r.fail_unless(basis.size() == dim, "real basis size " + std::to_string(basis.size()));
  r.fail_unless(real_rank(std::vector<QMatrix>([&] {
                  std::vector<QMatrix> m;
                  for (const auto& b : basis) m.push_back(b.matrix);
                  return m;
                }())) == dim,
                "real basis of g is dependent");
  for (const auto& b : basis) {
    if (!in_algebra(b.matrix, n)) r.fail("basis element " + b.label + " not in g");
    if (grade_project(b.matrix, b.grade) != b.matrix) r.fail("basis element " + b.label + " not of grade " + std::to_string(b.grade));
    if (block_project(b.matrix, b.grade) != b.matrix) r.fail("block grade of " + b.label);
  }
  const auto tbasis = real_basis_gtilde(n);
  r.fail_unless(tbasis.size() == gt_size(n) * gt_size(n) - 1, "real basis of gt has size " + std::to_string(tbasis.size()));
  for (const auto& b : tbasis)
    if (!in_algebra(b, n)) r.fail("gt basis element outside gt:\n" + to_string(b));
  return r;
}

CheckReport bracket_example(int n) {
  CheckReport r{"graded_lie.bracket_example", "[[xbar=1]_-1, [xbar=ibar]_-1] = [pbar=2i]_-2, [E, X_-1] = -X_-1, [M, M] = 0"};
  r.trials = 1;
  HVector one(n), ibar(n);
  one[0] = Quaternion(1);
  ibar[0] = conj(Quaternion::unit_i());
  const QMatrix br = commutator(make_g_minus1(one), make_g_minus1(ibar));
  const QMatrix expect = make_g_minus2(n, Quaternion(Rational(0), Rational(2), Rational(0), Rational(0)));
  r.fail_unless(br == expect, "bracket = \n" + to_string(br));
  const QMatrix x = make_g_minus1(ibar);
  r.fail_unless(commutator(grading_element(n), x) == x.scaled(Rational(-1)), "[E, X_-1] != -X_-1");
  r.fail_unless(commutator(x, x).is_zero(), "[M, M] != 0");
  return r;
}

CheckReport grading_laws(int n, std::size_t trials, std::uint64_t seed) {
  CheckReport r{"graded_lie.grading_laws", "[g_i, g_j] in g_{i+j}; components sum to M and are ad(E)-eigenvectors"};
  run_trials(r, trials, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, r.name, t));
    const int i = static_cast<int>(rng.integer(kMinGrade, kMaxGrade));
    const int j = static_cast<int>(rng.integer(kMinGrade, kMaxGrade));
    const QMatrix x = rng.g_element(n, i, i);
    const QMatrix y = rng.g_element(n, j, j);
    const QMatrix b = commutator(x, y);
    if (!in_algebra(b, n)) return "bracket left g for grades " + std::to_string(i) + "," + std::to_string(j);
    const int k = i + j;
    if (k < kMinGrade || k > kMaxGrade) {
      if (!b.is_zero()) return "nonzero bracket beyond grade 2 for " + std::to_string(i) + "," + std::to_string(j);
    } else if (grade_project(b, k) != b) {
      return "[g_" + std::to_string(i) + ", g_" + std::to_string(j) + "] not in g_" + std::to_string(k);
    }
    const QMatrix m = rng.g_element(n);
    QMatrix sum(g_size(n), g_size(n));
    for (int g = kMinGrade; g <= kMaxGrade; ++g) {
      const QMatrix c = grade_project(m, g);
      if (commutator(grading_element(n), c) != c.scaled(Rational(g))) return "component " + std::to_string(g) + " not an eigenvector";
      if (c != block_project(m, g)) return "grade projection differs from block slots in grade " + std::to_string(g);
      sum += c;
    }
    if (sum != m) return "components do not sum to M:\n" + to_string(m);
    return std::nullopt;
  });
  return r;
}

// --- embedding -----------------------------------------------------------------------

CheckReport phi_minus1_closed_form(int n, std::size_t per_grade, std::uint64_t seed, const PhiMap& map) {
  CheckReport r{"embedding.phi_minus1", "closed-form phi_-1 on [pbar]_-2, [xbar]_-1, [(a,A0)]_0 equals proj_{gt_-1} o phi"};
  run_trials(r, 6 * per_grade, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, r.name, t));
    const int kind = static_cast<int>(t % 6);
    const QMatrix m = kind < 5 ? rng.g_element(n, kind - 2, kind - 2) : rng.g_element(n);
    const Row4 closed = phi_minus1(m);
    const Row4 projected = row4_from_matrix(grade_project(map(m), -1));
    if (closed != projected) return "closed " + to_string(closed) + " vs projected " + to_string(projected) + " at\n" + to_string(m);
    return std::nullopt;
  });
  return r;
}

CheckReport homomorphism(int n, std::size_t trials, std::uint64_t seed, const PhiMap& map) {
  CheckReport r{"embedding.homomorphism", "phi([M,N]) = [phi M, phi N]"};
  run_trials(r, trials, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, r.name, t));
    const QMatrix m = rng.g_element(n);
    const QMatrix k = rng.g_element(n);
    if (map(commutator(m, k)) != commutator(map(m), map(k))) return "M =\n" + to_string(m) + "\nN =\n" + to_string(k);
    return std::nullopt;
  });
  return r;
}

CheckReport phi_into_su(int n, std::size_t trials, std::uint64_t seed, const PhiMap& map) {
  CheckReport r{"embedding.phi_into_su", "phi(sp(Q)) in su(Qt), phi(M^*) = phi(M)^*"};
  run_trials(r, trials, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, r.name, t));
    const QMatrix m = rng.g_element(n);
    if (!in_algebra(map(m), n)) return "phi(M) outside su(Qt) for M =\n" + to_string(m);
    if (map(m.adjoint()) != map(m).adjoint()) return "phi does not commute with adjoints at M =\n" + to_string(m);
    return std::nullopt;
  });
  return r;
}

CheckReport filtration(int n, std::size_t trials, std::uint64_t seed, const PhiMap& map) {
  CheckReport r{"embedding.filtration", "phi(p_+) in pt, phi(g^-1) in gt^-1, phi(M) in pt => M in p"};
  r.trials = trials;
  if (trials == 0) {
    r.status = CheckStatus::skip;
    return r;
  }
  const FiltrationReport f = filtration_compat_check(n, trials, seed, map);
  if (!f.passed()) r.fail(f.failures.front().property + " fails at\n" + to_string(f.failures.front().counterexample));
  if (f.preimage_hits == 0) r.warnings.push_back("no sample landed in phi^-1(pt)");
  return r;
}

// --- g0_actions ----------------------------------------------------------------------

CheckReport rho_adjoint(int n, std::size_t trials, std::uint64_t seed) {
  CheckReport r{"g0_actions.rho_adjoint", "rho_-1, rho_-2, rho_0 are Ad(g) on the grades -1, -2, 0 and are actions"};
  run_trials(r, trials, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, r.name, t));
    const G0Element g = rng.g0(n);
    const G0Element h = rng.g0(n);
    const QMatrix G = g.matrix();
    const QMatrix Ginv = g.inverse().matrix();
    if (G * Ginv != QMatrix::identity(g_size(n))) return "inverse mismatch";
    const HVector xbar = rng.hvector(n);
    const Quaternion pbar = rng.imaginary_quaternion();
    const TwistorPoint q = rng.twistor_point();
    if (G * make_g_minus1(xbar) * Ginv != make_g_minus1(rho_minus1(g, xbar))) return "rho_-1 != Ad(g) at z = " + to_string(g.z());
    if (G * make_g_minus2(n, pbar) * Ginv != make_g_minus2(n, rho_minus2(g, pbar))) return "rho_-2 != Ad(g) at z = " + to_string(g.z());
    if (G * make_g_zero(n, q.quaternion()) * Ginv != make_g_zero(n, rho_0(g, q).quaternion()))
      return "rho_0 != Ad(g) at z = " + to_string(g.z());
    if (rho_minus1(g * h, xbar) != rho_minus1(g, rho_minus1(h, xbar))) return "rho_-1 not an action";
    if (rho_minus2(g * h, pbar) != rho_minus2(g, rho_minus2(h, pbar))) return "rho_-2 not an action";
    if (!(rho_0(g * h, q) == rho_0(g, rho_0(h, q)))) return "rho_0 not an action";
    return std::nullopt;
  });
  return r;
}

CheckReport stabilizer(int n, std::size_t trials, std::uint64_t seed) {
  CheckReport r{"g0_actions.stabilizer", "g in Sp(1)Sp(n) has Phi(g) preserving C d_0 iff z in U(1); R_+ always does"};
  run_trials(r, trials, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, r.name, t));
    const G0Element g = rng.sp1spn(n, t % 2 == 0);
    const bool in_u1 = is_zero(g.z().y) && is_zero(g.z().z);
    if (in_Ptilde_preimage(g) != in_u1) return "z = " + to_string(g.z());
    if (stabilizes_line(Phi(g.matrix())) != in_u1) return "line test disagrees at z = " + to_string(g.z());
    const G0Element dilation(rng.positive_rational(), Quaternion(1), QMatrix::identity(n));
    if (!in_Ptilde_preimage(dilation)) return "dilation by " + dilation.s().get_str() + " not contained";
    return std::nullopt;
  });
  return r;
}

CheckReport ad_conjugation(int n, std::size_t trials, std::uint64_t seed) {
  CheckReport r{"g0_actions.ad_conjugation", "Ad(g_I^-1)[-z_I j conj z_I]_-2 = [-j]_-2 and the k-analogue"};
  run_trials(r, trials, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, r.name, t));
    const G0Element g(Rational(1), rng.unit_quaternion(), rng.sp_n(n));
    for (const Quaternion& u : {Quaternion::unit_j(), Quaternion::unit_k()}) {
      const QMatrix lhs = ad_conjugate(g, make_g_minus2(n, -(g.z() * u * conj(g.z()))));
      if (lhs != make_g_minus2(n, -u)) return "z_I = " + to_string(g.z()) + ", unit " + to_string(u);
    }
    return std::nullopt;
  });
  return r;
}

CheckReport hopf_lift(std::size_t trials, std::uint64_t seed) {
  CheckReport r{"g0_actions.hopf_lift", "z_I with z_I i conj z_I = I; antipode -i lifts to j"};
  const auto antipode = solve_zI(TwistorPoint(-Quaternion::unit_i()));
  r.fail_unless(antipode && *antipode == Quaternion::unit_j(), "antipode does not lift to j");
  const auto lone = solve_zI(TwistorPoint(Quaternion(Rational(0), rat(1, 3), rat(2, 3), rat(2, 3))));
  r.fail_unless(!lone, "rational lift reported over 1/3 i + 2/3 j + 2/3 k");
  r.trials = 1;
  run_trials(r, trials, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, r.name, t));
    const TwistorPoint I = rng.twistor_point();
    const auto z = solve_zI(I);
    if (!z) return "no lift found over " + to_string(I.quaternion());
    if (!is_unit(*z) || !(rho_0(G0Element(Rational(1), *z, QMatrix::identity(1)), TwistorPoint::i()) == I))
      return "bad lift " + to_string(*z) + " over " + to_string(I.quaternion());
    return std::nullopt;
  });
  return r;
}

// --- correspondence ------------------------------------------------------------------

CheckReport reeb_tuples(int n, std::size_t trials, std::uint64_t seed) {
  CheckReport r{"correspondence.reeb_tuples", "phi_-1 values (0, s, 0, -1), (0, -s i, 0, i) on lifted xi_J, xi_K; J0 maps one to the other"};
  run_trials(r, trials, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, r.name, t));
    const ScaleParams scale{rng.rational()};
    const G0Element g(Rational(1), rng.unit_quaternion(), rng.sp_n(n));
    const QMatrix omega_A = rng.sp_n_algebra(n);
    const Row4 vJ = omega_value_reeb(ReebDirection::J, scale, g, omega_A);
    const Row4 vK = omega_value_reeb(ReebDirection::K, scale, g, omega_A);
    const Complex s(scale.s_tilde);
    const Complex i = Complex::i();
    if (vJ != tuple(n, s, Complex(-1))) return "xi_J value " + to_string(vJ) + " at z = " + to_string(g.z());
    if (vK != tuple(n, -(s * i), i)) return "xi_K value " + to_string(vK) + " at z = " + to_string(g.z());
    if (j0(vJ) != vK) return "J0 of the xi_J value";
    if (j0(vK) != -vJ) return "J0 of the xi_K value";
    return std::nullopt;
  });
  return r;
}

CheckReport twistor_frames(std::size_t trials, std::uint64_t seed) {
  CheckReport r{"correspondence.twistor_frames", "(z i zbar, z j zbar, z k zbar) oriented orthonormal; I x J = K, I x K = -J"};
  run_trials(r, trials, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, r.name, t));
    const TwistorFrame f = twistor_frame(rng.unit_quaternion());
    if (!is_oriented_orthonormal(f)) return "frame at I = " + to_string(f.I);
    const twistor::Vec3<Rational> I{f.I.x, f.I.y, f.I.z}, J{f.J.x, f.J.y, f.J.z}, K{f.K.x, f.K.y, f.K.z};
    const auto IxK = twistor::cross(I, K);
    if (IxK[0] != -J[0] || IxK[1] != -J[1] || IxK[2] != -J[2]) return "I x K != -J at I = " + to_string(f.I);
    return std::nullopt;
  });
  return r;
}

// --- flat model ----------------------------------------------------------------------

CheckReport flat_definitions(int n) {
  CheckReport r{"flat_twistor.definitions",
                "eta^b(X) = 0 on D; d eta^a(u,v) = 2 g(I_a u, v); xi_a _| eta^b = delta; xi_a _| d eta^b antisymmetric on D; quaternion relations; d^2 = 0"};
  r.trials = 1;
  const FlatQC m = build_flat_qc(n);
  for (const auto& v : {distribution_violation(m), contact_violation(m), reeb_violation(m), quaternion_violation(m),
                        d_squared_violation(m)})
    if (v) r.fail(*v);
  return r;
}

CheckReport duchemin(int n) {
  CheckReport r{"flat_twistor.duchemin", "d eta^a|D orthonormal (up to a constant), self-dual and oriented in L^2_+ D*"};
  if (n != 1) {
    r.status = CheckStatus::skip;
    r.warnings.push_back("only defined for n = 1");
    return r;
  }
  r.trials = 1;
  FlatQC m = build_flat_qc(1);
  const DucheminReport d = duchemin_check(m);
  r.fail_unless(d.passed(), "gram\n" + to_string(d.gram) + "\norientation " + d.orientation.get_str() +
                                (d.self_dual ? "" : ", not self-dual"));
  std::swap(m.eta[0], m.eta[1]);
  r.fail_unless(!duchemin_check(m).passed(), "swapping eta^1 and eta^2 still passes");
  return r;
}

CheckReport cr_structure(int n, std::size_t trials, std::uint64_t seed) {
  CheckReport r{"flat_twistor.cr_structure",
                "J^2 = -Id on H; J = I on D; xi_J -> xi_K -> -xi_J; vertical J -> K; charts agree; I_I I_J = I_{I x J}"};
  const std::size_t h = twistor::h_rank(n);
  const std::size_t four_n = 4 * static_cast<std::size_t>(n);
  {
    const TwistorChart c = make_twistor_chart(n, std::vector<Rational>(4 * n + 3, Rational(0)), TwistorPoint::i());
    const auto pt = c.point();
    const auto v = pt.apply_J(pt.reeb_along({Rational(0), Rational(1), Rational(0)}));
    r.fail_unless(v == pt.reeb_along({Rational(0), Rational(0), Rational(1)}), "J xi_2 != xi_3 at I = i");
    const RMatrix J = cr_structure_at(c).J;
    const RMatrix I1 = left_multiplication_matrix(Quaternion::unit_i(), n);
    for (std::size_t a = 0; a < four_n; ++a)
      for (std::size_t b = 0; b < four_n; ++b) r.fail_unless(J(a, b) == I1(a, b), "J on D differs from I_1 at I = i");
  }
  r.trials = 1;
  run_trials(r, trials, [&](std::size_t t) -> std::optional<std::string> {
    Sampler rng(derive_seed(seed, r.name, t));
    std::vector<Rational> base(4 * n + 3);
    for (auto& b : base) b = rng.rational();
    const TwistorFrame f = twistor_frame(rng.unit_quaternion());
    const TwistorPoint I(f.I);
    const TwistorChart c = make_twistor_chart(n, base, I);
    const auto pt = c.point();
    const CRStructure cr = cr_structure_at(c);
    const std::string where = "I = " + to_string(f.I);
    if (cr.J * cr.J != minus_identity(h)) return "J^2 != -Id at " + where;

    const RMatrix LI = left_multiplication_matrix(f.I, n);
    for (std::size_t a = 0; a < four_n; ++a)
      for (std::size_t b = 0; b < h; ++b)
        if (cr.J(a, b) != (b < four_n ? LI(a, b) : Rational(0)))
          return "J on D is not left multiplication by I at " + where;
    if (LI * left_multiplication_matrix(f.J, n) != left_multiplication_matrix(f.K, n)) return "I_I I_J != I_K at " + where;

    auto imag = [](const Quaternion& q) { return twistor::Vec3<Rational>{q.x, q.y, q.z}; };
    const auto xiJ = pt.reeb_along(imag(f.J));
    const auto xiK = pt.reeb_along(imag(f.K));
    if (pt.apply_J(xiJ) != xiK) return "J xi_J != xi_K at " + where;
    if (pt.apply_J(xiK) != pt.reeb_along(imag(-f.J))) return "J xi_K != -xi_J at " + where;

    std::vector<Rational> vertical(twistor::dimension(n) + 1, Rational(0));
    for (int a = 0; a < 3; ++a) vertical[twistor::s_offset(n) + a] = f.J[a + 1];
    const auto jv = pt.geometric(pt.apply_J(pt.from_geometric(vertical)));
    for (int a = 0; a < 3; ++a)
      if (jv[twistor::s_offset(n) + a] != f.K[a + 1]) return "vertical J(J) != K at " + where;

    if (!is_zero(f.I.x - 1) && !is_zero(f.I.x + 1)) {
      const auto other = make_twistor_chart(n, base, I, 1 - c.chart).point();
      for (std::size_t a = 0; a < h; ++a) {
        const auto g = pt.geometric(pt.frame(a));
        const auto there = other.from_geometric(g);
        if (pt.geometric(pt.apply_J(pt.frame(a))) != other.geometric(other.apply_J(there)))
          return "charts disagree on J at " + where;
      }
    }
    return std::nullopt;
  });
  return r;
}

namespace {

std::string describe_sample(std::size_t i, const ModelSample& s) {
  std::ostringstream os;
  os << "sample " << i << ": signature (" << s.levi.positive << ',' << s.levi.negative << "), min |eig| " << fmt(s.levi.min_abs_eig)
     << ", fibre (" << fmt(s.fiber[0]) << ", " << fmt(s.fiber[1]) << ", " << fmt(s.fiber[2]) << ")";
  return os.str();
}

}  // namespace

CheckReport levi(int n, const std::vector<ModelSample>& samples, const ModelConfig& cfg) {
  CheckReport r{"flat_twistor.levi_signature", "Levi form dtheta(X, JY) on H has signature (4n+2, 2)"};
  r.trials = samples.size();
  if (samples.empty()) {
    r.status = CheckStatus::skip;
    return r;
  }
  double asym = 0;
  std::size_t degenerate = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const ModelSample& s = samples[i];
    asym = std::max(asym, s.levi.asymmetry);
    if (s.degenerate) ++degenerate;
    if (s.degenerate || s.levi.positive != 4 * n + 2 || s.levi.negative != 2) r.fail(describe_sample(i, s));
  }
  r.max_abs_error = asym;
  if (degenerate > 0)
    r.warnings.push_back(std::to_string(degenerate) + " degenerate samples (min |eig| <= " + fmt(cfg.eig_floor) + ")");
  return r;
}

CheckReport integrability(int n, const std::vector<ModelSample>& samples, const ModelConfig& cfg) {
  (void)n;
  CheckReport r{"flat_twistor.integrability", "[X,Y] - [JX,JY] in H and J([X,Y] - [JX,JY]) = [JX,Y] + [X,JY] mod xi_I"};
  r.trials = samples.size();
  if (samples.empty()) {
    r.status = CheckStatus::skip;
    return r;
  }
  const double worst = integrability_residual(samples);
  r.max_abs_error = worst;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!(s.integrability.max() < cfg.residual_tol))
      r.fail("sample " + std::to_string(i) + ": partial " + fmt(s.integrability.partial) + ", nijenhuis " + fmt(s.integrability.nijenhuis));
  }
  if (worst == 0.0) r.warnings.push_back("all residuals vanish identically; check the finite-difference step");
  return r;
}

CheckReport perturbation_probe(int n, std::size_t count, std::uint64_t seed, const ModelConfig& cfg, double eps,
                               double threshold) {
  CheckReport r{"flat_twistor.perturbation_probe", "integrability residual of J + eps E exceeds the detection threshold"};
  ModelConfig perturbed = cfg;
  perturbed.perturbation = eps;
  const auto samples = sample_model(n, count, seed, perturbed);
  r.trials = samples.size();
  if (samples.empty()) {
    r.status = CheckStatus::skip;
    return r;
  }
  double weakest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double v = samples[i].integrability.max();
    weakest = std::min(weakest, v);
    if (!(v > threshold)) r.fail("sample " + std::to_string(i) + ": perturbed residual " + fmt(v));
  }
  r.warnings.push_back("smallest perturbed residual " + fmt(weakest));
  return r;
}

}  // namespace checks

// --- suites ----------------------------------------------------------------------------

namespace {

void sort_checks(SuiteResult& r) {
  std::sort(r.checks.begin(), r.checks.end(), [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
}

}  // namespace

SuiteResult run_algebra_suite(const SuiteConfig& cfg, const SuiteHooks& hooks) {
  cfg.validate();
  SuiteResult r{"algebra", cfg.n, cfg.seed, {}, {}};
  const int n = cfg.n;
  const std::size_t t = cfg.trials;
  const std::uint64_t s = cfg.seed;
  r.checks = {checks::grading_structure(n),
              checks::bracket_example(n),
              checks::grading_laws(n, t, s),
              checks::phi_minus1_closed_form(n, t, s, hooks.phi),
              checks::homomorphism(n, t, s, hooks.phi),
              checks::phi_into_su(n, t, s, hooks.phi),
              checks::filtration(n, t, s, hooks.phi),
              checks::rho_adjoint(n, t, s),
              checks::stabilizer(n, t, s),
              checks::ad_conjugation(n, t, s),
              checks::hopf_lift(t, s),
              checks::reeb_tuples(n, t, s),
              checks::twistor_frames(t, s),
              vertical_map_check(n),
              horizontal_map_check(n, t, s),
              identification_audit(n, t, s)};
  sort_checks(r);
  return r;
}

SuiteResult run_model_suite(const SuiteConfig& cfg) {
  cfg.validate();
  SuiteResult r{"model", cfg.n, cfg.seed, {}, {}};
  const int n = cfg.n;
  r.samples = sample_model(n, cfg.trials, cfg.seed, cfg.model);
  r.checks = {checks::flat_definitions(n),
              checks::duchemin(n),
              checks::cr_structure(n, std::min<std::size_t>(cfg.trials, 50), cfg.seed),
              checks::levi(n, r.samples, cfg.model),
              checks::integrability(n, r.samples, cfg.model),
              checks::perturbation_probe(n, std::min<std::size_t>(cfg.trials, 10), cfg.seed, cfg.model)};
  sort_checks(r);
  return r;
}

SuiteResult run_all_suites(const SuiteConfig& cfg) {
  SuiteResult all = run_algebra_suite(cfg);
  SuiteResult model = run_model_suite(cfg);
  all.suite = "all";
  all.checks.insert(all.checks.end(), model.checks.begin(), model.checks.end());
  all.samples = std::move(model.samples);
  sort_checks(all);
  return all;
}

// --- rendering ---------------------------------------------------------------------------

namespace {

ordered_json check_json(const CheckReport& c) {
  ordered_json j;
  j["name"] = c.name;
  j["paper_ref"] = c.paper_ref;
  j["status"] = to_string(c.status);
  j["trials"] = c.trials;
  if (c.max_abs_error)
    j["max_abs_error"] = *c.max_abs_error;
  else
    j["max_abs_error"] = "exact";
  j["counterexample"] = c.counterexample ? ordered_json(*c.counterexample) : ordered_json(nullptr);
  j["warnings"] = c.warnings;
  return j;
}

ordered_json sample_json(const ModelSample& s) {
  ordered_json j;
  j["point"] = s.point.coords;
  j["chart"] = s.point.chart;
  j["fiber"] = s.fiber;
  j["signature"] = {s.levi.positive, s.levi.negative};
  j["min_eig"] = s.levi.min_abs_eig;
  j["degenerate"] = s.degenerate;
  j["residuals"] = {{"partial", s.integrability.partial}, {"nijenhuis", s.integrability.nijenhuis}};
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string error_text(const CheckReport& c) {
  return c.max_abs_error ? fmt(*c.max_abs_error) : std::string("exact");
}

}  // namespace

std::string to_json(const SuiteResult& r) {
  ordered_json j;
  j["schema"] = 1;
  j["suite"] = r.suite;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_json(c));
  j["summary"] = {{"pass", r.count(CheckStatus::pass)}, {"fail", r.count(CheckStatus::fail)}, {"skip", r.count(CheckStatus::skip)}};
  if (!r.samples.empty()) {
    j["samples"] = ordered_json::array();
    for (const auto& s : r.samples) j["samples"].push_back(sample_json(s));
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const SuiteResult& r) {
  std::string out = "name,status,trials,max_abs_error,counterexample\n";
  for (const auto& c : r.checks) {
    out += csv_field(c.name) + ',' + to_string(c.status) + ',' + std::to_string(c.trials) + ',' + error_text(c) + ',' +
           csv_field(c.counterexample.value_or("")) + '\n';
  }
  return out;
}

std::string to_text(const SuiteResult& r) {
  std::ostringstream os;
  os << r.suite << " suite, n = " << r.n << ", seed = " << r.seed << '\n';
  for (const auto& c : r.checks) {
    std::string status = to_string(c.status);
    std::transform(status.begin(), status.end(), status.begin(), [](unsigned char ch) { return std::toupper(ch); });
    os << std::left << std::setw(5) << status << ' ' << std::setw(36) << c.name << " trials=" << c.trials
       << " error=" << error_text(c) << '\n';
    for (const auto& w : c.warnings) os << "      warning: " << w << '\n';
    if (c.counterexample) os << "      counterexample: " << *c.counterexample << '\n';
  }
  os << r.count(CheckStatus::pass) << " pass, " << r.count(CheckStatus::fail) << " fail, " << r.count(CheckStatus::skip)
     << " skip\n";
  return os.str();
}

std::string render(const SuiteResult& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return to_json(r);
    case OutputFormat::csv: return to_csv(r);
    case OutputFormat::text: return to_text(r);
  }
  return {};
}

// --- bracket tables ------------------------------------------------------------------------

std::string bracket_table_csv(int n) {
  std::string out = std::string(kBracketCsvHeader) + "\n";
  for (const auto& row : bracket_table(n)) {
    out += std::to_string(row.i) + ',' + std::to_string(row.j) + ',' + std::to_string(row.slot);
    for (int c = 0; c < 4; ++c) out += ',' + row.coeff[c].get_str();
    out += '\n';
  }
  return out;
}

std::string bracket_table_json(int n) {
  ordered_json j;
  j["schema"] = 1;
  j["n"] = n;
  j["basis"] = ordered_json::array();
  for (const auto& b : real_basis_g(n)) j["basis"].push_back(b.label);
  j["slots"] = ordered_json::array();
  for (const auto& s : slot_layout(n)) j["slots"].push_back(s.label);
  j["rows"] = ordered_json::array();
  for (const auto& row : bracket_table(n)) {
    ordered_json e;
    e["i"] = row.i;
    e["j"] = row.j;
    e["k"] = row.slot;
    e["coeff"] = {row.coeff.w.get_str(), row.coeff.x.get_str(), row.coeff.y.get_str(), row.coeff.z.get_str()};
    j["rows"].push_back(e);
  }
  return j.dump(2) + "\n";
}

namespace {

Rational parse_rational(const std::string& s) {
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw std::runtime_error("bracket table: bad rational '" + s + "'");
  }
}

std::size_t parse_index(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::runtime_error("bracket table: bad index '" + s + "'");
  return static_cast<std::size_t>(std::stoull(s));
}

}  // namespace

std::vector<BracketRow> parse_bracket_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kBracketCsvHeader) throw std::runtime_error("bracket table: missing header");
  std::vector<BracketRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 7) throw std::runtime_error("bracket table: expected 7 fields in '" + line + "'");
    rows.push_back({parse_index(f[0]), parse_index(f[1]), parse_index(f[2]),
                    Quaternion(parse_rational(f[3]), parse_rational(f[4]), parse_rational(f[5]), parse_rational(f[6]))});
  }
  return rows;
}

std::vector<BracketRow> parse_bracket_json(const std::string& text, int* n) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("schema").get<int>() != 1) throw std::runtime_error("bracket table: unknown schema");
    if (n) *n = j.at("n").get<int>();
    std::vector<BracketRow> rows;
    for (const auto& e : j.at("rows")) {
      const auto& c = e.at("coeff");
      if (c.size() != 4) throw std::runtime_error("bracket table: coefficient needs 4 components");
      rows.push_back({e.at("i").get<std::size_t>(), e.at("j").get<std::size_t>(), e.at("k").get<std::size_t>(),
                      Quaternion(parse_rational(c[0].get<std::string>()), parse_rational(c[1].get<std::string>()),
                                 parse_rational(c[2].get<std::string>()), parse_rational(c[3].get<std::string>()))});
    }
    return rows;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("bracket table: ") + e.what());
  }
}

CheckReport verify_bracket_table(int n, const std::vector<BracketRow>& rows) {
  CheckReport r{"graded_lie.bracket_table", "structure constants rebuild [b_i, b_j] and are antisymmetric"};
  const auto basis = real_basis_g(n);
  const std::size_t slots = slot_layout(n).size();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<BracketRow>> by_pair;
  for (const auto& row : rows) {
    if (row.i >= basis.size() || row.j >= basis.size() || row.slot >= slots) {
      r.fail("row index out of range: " + std::to_string(row.i) + "," + std::to_string(row.j) + "," + std::to_string(row.slot));
      return r;
    }
    by_pair[{row.i, row.j}].push_back(row);
  }
  const std::vector<BracketRow> none;
  auto rows_for = [&](std::size_t i, std::size_t j) -> const std::vector<BracketRow>& {
    auto it = by_pair.find({i, j});
    return it == by_pair.end() ? none : it->second;
  };
  r.trials = basis.size() * (basis.size() - 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const QMatrix built = assemble_bracket(n, rows_for(i, j), i, j);
      if (built != commutator(basis[i].matrix, basis[j].matrix))
        r.fail("[" + basis[i].label + ", " + basis[j].label + "] not reproduced");
      if (i < j && built != assemble_bracket(n, rows_for(j, i), j, i).scaled(Rational(-1)))
        r.fail("table not antisymmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  return r;
}

}  // namespace qctw
