#include "qctw/embedding.hpp"
#include "qctw/g0_actions.hpp"
#include "qctw/sampling.hpp"

#include <gtest/gtest.h>

using namespace qctw;

namespace {

const Quaternion kZj(rat(3, 5), 0, rat(4, 5), 0);  // 3/5 + 4/5 j
const Quaternion kZi(rat(3, 5), rat(4, 5), 0, 0);  // 3/5 + 4/5 i
const Quaternion kI = Quaternion::unit_i();

G0Element g(Rational s, Quaternion z, int n = 1) { return G0Element(std::move(s), std::move(z), QMatrix::identity(n)); }

HVector e1(int n, const Quaternion& q) {
  HVector v(n);
  v[0] = q;
  return v;
}

}  // namespace

TEST(G0Element, Validation) {
  EXPECT_THROW(g(0, Quaternion(1)), std::invalid_argument);
  EXPECT_THROW(g(1, Quaternion(2)), std::invalid_argument);
  QMatrix a = QMatrix::identity(1);
  a(0, 0) = Quaternion(2);
  EXPECT_THROW(G0Element(1, Quaternion(1), a), std::invalid_argument);
  EXPECT_THROW(TwistorPoint(Quaternion(1)), std::invalid_argument);
}

TEST(RhoMinus1, Examples) {
  const HVector x = e1(1, Quaternion(1));
  EXPECT_EQ(rho_minus1(G0Element::identity(1), x), x);
  EXPECT_EQ(rho_minus1(g(2, Quaternion(1)), x), e1(1, Quaternion(rat(1, 2))));
  const HVector jx = e1(1, Quaternion::unit_j());
  const G0Element h = g(1, kZi);
  EXPECT_EQ(rho_minus1(h, jx), e1(1, Quaternion::unit_j() * conj(kZi)));
  EXPECT_EQ(make_g_minus1(rho_minus1(h, jx)), h.matrix() * make_g_minus1(jx) * h.inverse().matrix());
}

TEST(RhoMinus2, Examples) {
  EXPECT_EQ(rho_minus2(g(1, kZi), -kI), -kI);
  EXPECT_EQ(rho_minus2(g(1, kZj), -kI), Quaternion(0, rat(7, 25), 0, rat(24, 25)));
  const Quaternion p(0, 1, 2, 3);
  EXPECT_EQ(rho_minus2(g(3, Quaternion(1)), p), rat(1, 9) * p);
  EXPECT_THROW(rho_minus2(g(1, kZj), Quaternion(1)), std::invalid_argument);
}

TEST(Rho0, Examples) {
  EXPECT_EQ(rho_0(g(1, kZi), TwistorPoint::i()), TwistorPoint::i());
  EXPECT_EQ(rho_0(g(1, kZj), TwistorPoint::i()), TwistorPoint(Quaternion(0, rat(-7, 25), 0, rat(-24, 25))));
  EXPECT_EQ(rho_0(g(1, Quaternion::unit_j()), TwistorPoint::i()), TwistorPoint(-kI));
}

TEST(Rho, AgreesWithAdjointAction) {
  for (std::uint64_t t = 0; t < 500; ++t) {
    Sampler s(derive_seed(13, "rho-ad", t));
    const int n = 1 + static_cast<int>(t % 3);
    const G0Element h = s.g0(n);
    const QMatrix G = h.matrix(), Gi = h.inverse().matrix();
    const HVector x = s.hvector(n);
    const Quaternion p = s.imaginary_quaternion();
    const TwistorPoint q = s.twistor_point();
    ASSERT_EQ(G * make_g_minus1(x) * Gi, make_g_minus1(rho_minus1(h, x)));
    ASSERT_EQ(G * make_g_minus2(n, p) * Gi, make_g_minus2(n, rho_minus2(h, p)));
    ASSERT_EQ(G * make_g_zero(n, q.quaternion()) * Gi, make_g_zero(n, rho_0(h, q).quaternion()));
    ASSERT_EQ(ad_conjugate(h.inverse(), make_g_minus1(x)), make_g_minus1(rho_minus1(h, x)));
  }
}

TEST(Rho0, GroupActionWithKernelPlusMinusOne) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Sampler s(derive_seed(13, "rho0", t));
    const G0Element a = s.g0(1), b = s.g0(1);
    const TwistorPoint q = s.twistor_point();
    ASSERT_EQ(rho_0(a * b, q), rho_0(a, rho_0(b, q)));
  }
  const std::vector<TwistorPoint> axes{TwistorPoint::i(), TwistorPoint(Quaternion::unit_j()), TwistorPoint(Quaternion::unit_k())};
  auto trivial = [&](const Quaternion& z) {
    for (const auto& q : axes)
      if (!(rho_0(g(1, z), q) == q)) return false;
    return true;
  };
  EXPECT_TRUE(trivial(Quaternion(1)));
  EXPECT_TRUE(trivial(Quaternion(-1)));
  EXPECT_FALSE(trivial(kZi));
  EXPECT_FALSE(trivial(kZj));
}

TEST(Stabilizer, Examples) {
  EXPECT_TRUE(in_Ptilde_preimage(g(1, kI)));
  EXPECT_FALSE(in_Ptilde_preimage(g(1, Quaternion::unit_j())));
  EXPECT_TRUE(in_Ptilde_preimage(g(7, Quaternion(1))));
}

TEST(Stabilizer, CircleFactorExactly) {
  for (std::uint64_t t = 0; t < 500; ++t) {
    Sampler s(derive_seed(13, "stab", t));
    const int n = 1 + static_cast<int>(t % 3);
    const G0Element h = s.sp1spn(n, t % 2 == 0);
    const bool in_u1 = is_zero(h.z().y) && is_zero(h.z().z);
    ASSERT_EQ(in_Ptilde_preimage(h), in_u1);
    ASSERT_EQ(rho_0(h, TwistorPoint::i()) == TwistorPoint::i(), in_u1);
    ASSERT_EQ(stabilizes_line(Phi(h.matrix())), in_u1);
  }
}

TEST(SolveZI, Examples) {
  EXPECT_EQ(solve_zI(TwistorPoint::i()), Quaternion(1));
  EXPECT_EQ(solve_zI(TwistorPoint(-kI)), Quaternion::unit_j());
  const TwistorPoint target(Quaternion(0, rat(-7, 25), 0, rat(-24, 25)));
  const auto z = solve_zI(target);
  ASSERT_TRUE(z);
  EXPECT_EQ(rho_0(g(1, *z), TwistorPoint::i()), target);
  EXPECT_EQ(rho_0(g(1, kZj), TwistorPoint::i()), target);
}

TEST(SolveZI, EmptyRationalFibre) {
  // 2(1 + 1/3) = 8/3 is not a sum of two rational squares
  EXPECT_FALSE(solve_zI(TwistorPoint(Quaternion(0, rat(1, 3), rat(2, 3), rat(2, 3)))));
}

TEST(SolveZI, RoundTrip) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Sampler s(derive_seed(13, "solve", t));
    const TwistorPoint target = s.twistor_point();
    const auto z = solve_zI(target);
    ASSERT_TRUE(z) << to_string(target.quaternion());
    ASSERT_TRUE(is_unit(*z));
    ASSERT_EQ(rho_0(g(1, *z), TwistorPoint::i()), target);
  }
}

TEST(AdConjugate, ReebDirections) {
  EXPECT_EQ(ad_conjugate(G0Element::identity(2), make_g_minus2(2, kI)), make_g_minus2(2, kI));
  for (std::uint64_t t = 0; t < 100; ++t) {
    Sampler s(derive_seed(13, "adconj", t));
    const TwistorPoint I = s.twistor_point();
    const Quaternion z = *solve_zI(I);
    const G0Element gI(1, z, s.sp_n(2));
    for (const Quaternion& u : {Quaternion::unit_j(), Quaternion::unit_k()})
      ASSERT_EQ(ad_conjugate(gI, make_g_minus2(2, -(z * u * conj(z)))), make_g_minus2(2, -u));
  }
}

TEST(Sampling, SymplecticUnitary) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Sampler s(derive_seed(13, "spn", t));
    ASSERT_TRUE(is_symplectic_unitary(s.sp_n(3)));
    const QMatrix a = s.sp_n_algebra(3);
    ASSERT_EQ(a.adjoint(), a.scaled(Rational(-1)));
  }
}
