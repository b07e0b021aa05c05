#include "qctw/matrix.hpp"
#include "qctw/sampling.hpp"

#include <gtest/gtest.h>

using namespace qctw;

TEST(Matrix, ProductAndAdjoint) {
  QMatrix a(2, 2), b(2, 2);
  a(0, 1) = Quaternion::unit_i();
  b(1, 0) = Quaternion::unit_j();
  const QMatrix ab = a * b;
  EXPECT_EQ(ab(0, 0), Quaternion::unit_k());
  EXPECT_EQ((a * b).adjoint(), b.adjoint() * a.adjoint());
  EXPECT_THROW(a * QMatrix(3, 3), std::invalid_argument);
}

TEST(Matrix, LeftAndRightScalingDiffer) {
  QMatrix a = QMatrix::identity(1);
  a(0, 0) = Quaternion::unit_i();
  EXPECT_EQ(a.scaled(Quaternion::unit_j())(0, 0), -Quaternion::unit_k());
  EXPECT_EQ(a.scaled_right(Quaternion::unit_j())(0, 0), Quaternion::unit_k());
}

TEST(Matrix, Rank) {
  RMatrix m(3, 3);
  m(0, 0) = 1;
  m(1, 1) = 2;
  m(2, 0) = 3;
  EXPECT_EQ(rank(m), 2u);
  m(2, 2) = rat(1, 7);
  EXPECT_EQ(rank(m), 3u);
}

TEST(Matrix, CommutatorIsAntisymmetric) {
  for (std::uint64_t t = 0; t < 50; ++t) {
    Sampler s(derive_seed(3, "commutator", t));
    const QMatrix a = s.sp_n_algebra(2), b = s.sp_n_algebra(2);
    ASSERT_EQ(commutator(a, b), commutator(b, a).scaled(Rational(-1)));
    ASSERT_TRUE(commutator(a, a).is_zero());
  }
}
