#include "qctw/sampling.hpp"
#include "qctw/scalar.hpp"

#include <gtest/gtest.h>

using namespace qctw;

namespace {

const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(rat(2, -4), rat(-1, 2));
  EXPECT_EQ(rat(2, -4).get_den(), 2);
  EXPECT_THROW(rat(1, 0), std::invalid_argument);
}

TEST(Quaternion, BasisTable) {
  EXPECT_EQ(I * J, K);
  EXPECT_EQ(J * I, -K);
  EXPECT_EQ(J * K, I);
  EXPECT_EQ(K * I, J);
  for (const auto& u : {I, J, K}) EXPECT_EQ(u * u, Quaternion(-1));
}

TEST(Quaternion, ConjugationExample) {
  const Quaternion z(rat(3, 5), 0, rat(4, 5), 0);
  EXPECT_EQ(z * I * conj(z), Quaternion(0, rat(-7, 25), 0, rat(-24, 25)));
}

TEST(Quaternion, Conjugate) {
  EXPECT_EQ(conj(I), -I);
  EXPECT_EQ(conj(Quaternion(1) + J), Quaternion(1) - J);
}

TEST(Quaternion, InverseOfZeroThrows) { EXPECT_THROW(Quaternion().inverse(), std::domain_error); }

TEST(Quaternion, RandomIdentities) {
  for (std::uint64_t t = 0; t < 1000; ++t) {
    Sampler s(derive_seed(7, "quaternion", t));
    const Quaternion a = s.quaternion(), b = s.quaternion(), c = s.quaternion();
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(conj(a * b), conj(b) * conj(a));
    ASSERT_EQ((a * b).norm2(), a.norm2() * b.norm2());
    ASSERT_EQ(a + conj(a), Quaternion(Rational(2 * a.w)));
    ASSERT_EQ(join_complex(split_complex(a).first, split_complex(a).second), a);
  }
}

TEST(Split, Conventions) {
  EXPECT_EQ(split_complex(J), std::make_pair(Complex(0), Complex(1)));
  EXPECT_EQ(split_complex(K), std::make_pair(Complex(0), Complex(0, -1)));
  const Quaternion ab(rat(2), rat(-3), 0, 0);
  EXPECT_EQ(split_complex(ab), std::make_pair(Complex(rat(2), rat(-3)), Complex(0)));
  // q = q_u + j q_v
  const Quaternion q(1, 2, 3, 4);
  const auto [u, v] = split_complex(q);
  EXPECT_EQ(Quaternion(u) + J * Quaternion(v), q);
}

TEST(IdentifyVector, BasisVectors) {
  const CVector a = identify_vector(HVector{J, Quaternion(), Quaternion()});
  EXPECT_EQ(a, (CVector{Complex(), Complex(), Complex(), Complex(Rational(1)), Complex(), Complex()}));
  const CVector b = identify_vector(HVector{I, Quaternion(), Quaternion()});
  EXPECT_EQ(b, (CVector{Complex::i(), Complex(), Complex(), Complex(), Complex(), Complex()}));
}

TEST(IdentifyVector, RightComplexLinear) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Sampler s(derive_seed(7, "identify", t));
    const HVector v = s.hvector(3);
    const Complex c = s.complex();
    HVector vc(v.size());
    for (std::size_t a = 0; a < v.size(); ++a) vc[a] = v[a] * Quaternion(c);
    CVector expect = identify_vector(v);
    for (auto& e : expect) e = e * c;
    ASSERT_EQ(identify_vector(vc), expect);
    ASSERT_EQ(unidentify_vector(identify_vector(v)), v);
  }
}

TEST(UnitQuaternion, CircleFixesI) {
  const Quaternion z(rat(3, 5), rat(4, 5), 0, 0);
  EXPECT_EQ(z * I * conj(z), I);
  for (std::uint64_t t = 0; t < 200; ++t) {
    Sampler s(derive_seed(7, "u1", t));
    const Quaternion u = s.u1_element();
    ASSERT_EQ(u.norm2(), 1);
    ASSERT_EQ(u * I * conj(u), I);
    ASSERT_EQ(s.unit_quaternion().norm2(), 1);
  }
}

TEST(Format, ToString) {
  EXPECT_EQ(to_string(Quaternion(rat(1, 2), 3, -2, 0)), "1/2 + 3i - 2j");
  EXPECT_EQ(to_string(Quaternion()), "0");
}
