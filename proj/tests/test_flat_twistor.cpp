#include "qctw/flat_twistor.hpp"
#include "qctw/sampling.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace qctw;

namespace {

std::vector<std::string> golden_lines() {
  std::ifstream in(std::string(QCTW_TEST_DATA_DIR) + "/flat_contact.txt");
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  return lines;
}

std::vector<Rational> random_base(Sampler& s, int n) {
  std::vector<Rational> b(4 * n + 3);
  for (auto& x : b) x = s.rational();
  return b;
}

}  // namespace

TEST(FlatQC, MatchesGoldenDerivation) {
  const auto lines = golden_lines();
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "k = " + contact_coefficient().get_str());
  const FlatQC m = build_flat_qc(1);
  for (int a = 0; a < 3; ++a)
    EXPECT_EQ(lines[a + 1], "eta" + std::to_string(a + 1) + " = " + m.eta[a].to_string(flat_coordinate_names(1)));
}

TEST(FlatQC, DefinitionsHoldExactly) {
  for (int n = 1; n <= 3; ++n) {
    const FlatQC m = build_flat_qc(n);
    EXPECT_FALSE(distribution_violation(m)) << n;
    EXPECT_FALSE(contact_violation(m)) << n;
    EXPECT_FALSE(reeb_violation(m)) << n;
    EXPECT_FALSE(quaternion_violation(m)) << n;
    EXPECT_FALSE(d_squared_violation(m)) << n;
  }
  EXPECT_THROW(build_flat_qc(0), std::invalid_argument);
}

TEST(FlatQC, ContactConditionExample) {
  // d eta^1(e, I_1 e) = 2 for a unit e in D
  const FlatQC m = build_flat_qc(1);
  const PolyForm d1 = exterior_derivative(m.eta[0]);
  const VectorField I1e = m.d_frame[1];  // I_1 X_0 = X_1
  EXPECT_EQ(evaluate(d1, {m.d_frame[0], I1e}), Polynomial::constant(m.nvars, Rational(2)));
}

TEST(FlatQC, WrongCoefficientIsRejected) {
  FlatQC m = build_flat_qc(1);
  m.eta = contact_forms(1, rat(1, 2));
  EXPECT_TRUE(contact_violation(m));
}

TEST(Duchemin, OrthonormalOrientedSelfDual) {
  FlatQC m = build_flat_qc(1);
  const DucheminReport d = duchemin_check(m);
  EXPECT_TRUE(d.passed());
  EXPECT_EQ(d.gram, RMatrix::identity(3).scaled(Rational(8)));
  EXPECT_TRUE(d.self_dual);
  std::swap(m.eta[0], m.eta[1]);
  const DucheminReport swapped = duchemin_check(m);
  EXPECT_FALSE(swapped.passed());
  EXPECT_LT(sgn(swapped.orientation), 0);
  EXPECT_THROW(duchemin_check(build_flat_qc(2)), std::invalid_argument);
}

TEST(TwistorChart, NorthPoleExamples) {
  const TwistorChart c = make_twistor_chart(1, std::vector<Rational>(7, Rational(0)), TwistorPoint::i());
  const auto pt = c.point();
  EXPECT_EQ(pt.apply_J(pt.reeb_along({0, 1, 0})), pt.reeb_along({0, 0, 1}));
  const RMatrix J = cr_structure_at(c).J;
  const RMatrix I1 = left_multiplication_matrix(Quaternion::unit_i(), 1);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) EXPECT_EQ(J(a, b), I1(a, b));
}

TEST(TwistorChart, CrossProductExample) {
  const TwistorPoint I(Quaternion(0, rat(-7, 25), 0, rat(-24, 25)));
  const auto pt = make_twistor_chart(1, std::vector<Rational>(7, Rational(1)), I).point();
  EXPECT_EQ(pt.apply_J(pt.reeb_along({0, 1, 0})), pt.reeb_along({rat(24, 25), 0, rat(-7, 25)}));
}

TEST(TwistorChart, JSquaredAndChartOverlap) {
  for (std::uint64_t t = 0; t < 60; ++t) {
    Sampler s(derive_seed(29, "charts", t));
    const int n = 1 + static_cast<int>(t % 2);
    const TwistorPoint I = s.twistor_point();
    const auto base = random_base(s, n);
    const TwistorChart c = make_twistor_chart(n, base, I);
    const std::size_t h = twistor::h_rank(n);
    const CRStructure cr = cr_structure_at(c);
    ASSERT_EQ(cr.basis.size(), h);
    ASSERT_EQ(cr.J * cr.J, RMatrix::identity(h).scaled(Rational(-1)));
    if (is_zero(I.coefficient(1) - 1) || is_zero(I.coefficient(1) + 1)) continue;
    const auto p0 = c.point();
    const auto p1 = make_twistor_chart(n, base, I, 1 - c.chart).point();
    for (std::size_t a = 0; a < h; ++a) {
      const auto v1 = p1.from_geometric(p0.geometric(p0.frame(a)));
      ASSERT_EQ(p0.geometric(p0.apply_J(p0.frame(a))), p1.geometric(p1.apply_J(v1)));
    }
  }
}

TEST(TwistorChart, ThetaAnnihilatesH) {
  Sampler s(31);
  const auto pt = make_twistor_chart(2, random_base(s, 2), s.twistor_point()).point();
  for (std::size_t a = 0; a < twistor::h_rank(2); ++a) EXPECT_EQ(pt.theta(pt.frame(a)), 0);
  EXPECT_EQ(pt.theta(pt.reeb()), 1);
}

TEST(TwistorChart, ComplexStructuresCompose) {
  for (std::uint64_t t = 0; t < 50; ++t) {
    Sampler s(derive_seed(29, "compose", t));
    const Quaternion z = s.unit_quaternion();
    const Quaternion I = z * Quaternion::unit_i() * conj(z), J = z * Quaternion::unit_j() * conj(z);
    const twistor::Vec3<Rational> Iv{I.x, I.y, I.z}, Jv{J.x, J.y, J.z};
    const auto c = twistor::cross(Iv, Jv);
    ASSERT_EQ(left_multiplication_matrix(I, 2) * left_multiplication_matrix(J, 2),
              left_multiplication_matrix(Quaternion(0, c[0], c[1], c[2]), 2));
  }
}

TEST(LeviForm, SignatureOnSamples) {
  const ModelConfig cfg;
  for (int n = 1; n <= 2; ++n) {
    const auto samples = sample_model(n, 10, 5, cfg);
    const LeviSignature sig = levi_signature(samples);
    EXPECT_EQ(sig.positive, 4 * n + 2);
    EXPECT_EQ(sig.negative, 2);
    EXPECT_GT(sig.min_abs_eig, cfg.eig_floor);
    EXPECT_EQ(sig.degenerate_samples, 0u);
  }
}

TEST(LeviForm, NegatedThetaSwapsCounts) {
  ModelConfig cfg;
  cfg.theta_sign = -1;
  const LeviSignature sig = levi_signature(sample_model(1, 5, 5, cfg));
  EXPECT_EQ(sig.positive, 2);
  EXPECT_EQ(sig.negative, 6);
}

TEST(LeviForm, TinyStepIsReportedDegenerate) {
  ModelConfig cfg;
  cfg.fd_step = 1e-30;
  const auto samples = sample_model(1, 4, 5, cfg);
  EXPECT_EQ(levi_signature(samples).degenerate_samples, samples.size());
}

TEST(LeviForm, BracketRouteAgrees) {
  // theta(F) = theta(JF) = 0, so dtheta(X, JY) = -theta([X, JY]) on frame fields
  const ModelConfig cfg;
  const ModelPoint p = model_point(1, 3, 0);
  const LeviResult direct = levi_form_at(1, p, cfg);
  EXPECT_LT(direct.asymmetry, 1e-8);
  EXPECT_EQ(direct.eigenvalues.size(), twistor::h_rank(1));
}

TEST(Integrability, ResidualSmall) {
  const ModelConfig cfg;
  for (int n = 1; n <= 2; ++n) EXPECT_LT(integrability_residual(sample_model(n, 10, 5, cfg)), 1e-6);
}

TEST(Integrability, SameFieldIsExactlyZero) {
  const ModelConfig cfg;
  const ModelPoint p = model_point(1, 5, 1);
  for (std::size_t a = 0; a < twistor::h_rank(1); ++a) {
    const IntegrabilityResult r = integrability_pair(1, p, a, a, cfg);
    EXPECT_EQ(r.partial, 0.0);
    EXPECT_EQ(r.nijenhuis, 0.0);
  }
}

TEST(Integrability, PerturbationDetected) {
  ModelConfig cfg;
  cfg.perturbation = 0.1;
  for (const auto& s : sample_model(1, 10, 5, cfg)) EXPECT_GT(s.integrability.max(), 1e-3);
}

TEST(Sampling, SerialMatchesParallel) {
  const ModelConfig cfg;
  const auto a = sample_model(2, 8, 77, cfg, Execution::serial);
  const auto b = sample_model(2, 8, 77, cfg, Execution::parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].point.coords, b[i].point.coords);
    EXPECT_EQ(a[i].levi.eigenvalues, b[i].levi.eigenvalues);
    EXPECT_EQ(a[i].integrability.nijenhuis, b[i].integrability.nijenhuis);
  }
}
