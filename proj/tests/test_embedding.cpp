#include "qctw/embedding.hpp"
#include "qctw/sampling.hpp"

#include <gtest/gtest.h>

using namespace qctw;

namespace {

QMatrix scalar(const Quaternion& q) {
  QMatrix m(1, 1);
  m(0, 0) = q;
  return m;
}

CMatrix cmat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

HVector e1(int n, const Quaternion& q) {
  HVector v(n);
  v[0] = q;
  return v;
}

/// phi with the lower-left V block negated.
CMatrix broken_phi(const QMatrix& m) {
  CMatrix c = phi(m);
  const std::size_t h = m.rows();
  for (std::size_t r = h; r < 2 * h; ++r)
    for (std::size_t k = 0; k < h; ++k) c(r, k) = -c(r, k);
  return c;
}

}  // namespace

TEST(Phi, BlockFormula) {
  EXPECT_EQ(phi(scalar(Quaternion::unit_j())), cmat2(Complex(), Complex(Rational(-1)), Complex(Rational(1)), Complex()));
  EXPECT_EQ(phi(scalar(Quaternion::unit_i() + Quaternion::unit_j())), cmat2(Complex::i(), Complex(Rational(-1)), Complex(Rational(1)), -Complex::i()));
}

TEST(Phi, CompatibleWithIdentification) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Sampler s(derive_seed(5, "phi-action", t));
    const QMatrix m = s.g_element(2);
    const HVector x = s.hvector(4);
    HVector mx(4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) mx[r] += m(r, c) * x[c];
    const CVector ix = identify_vector(x);
    CVector phix(ix.size());
    const CMatrix p = phi(m);
    for (std::size_t r = 0; r < ix.size(); ++r)
      for (std::size_t c = 0; c < ix.size(); ++c) phix[r] += p(r, c) * ix[c];
    ASSERT_EQ(identify_vector(mx), phix);
  }
}

TEST(Phi, HomomorphismIntoSu) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Sampler s(derive_seed(5, "phi-hom", t));
    const int n = 1 + static_cast<int>(t % 3);
    const QMatrix a = s.g_element(n), b = s.g_element(n);
    ASSERT_EQ(phi(commutator(a, b)), commutator(phi(a), phi(b)));
    ASSERT_TRUE(in_algebra(phi(a), n));
  }
}

TEST(Phi, MutationIsDetected) {
  bool caught = false;
  for (std::uint64_t t = 0; t < 20 && !caught; ++t) {
    Sampler s(derive_seed(5, "phi-mutation", t));
    const QMatrix a = s.g_element(1), b = s.g_element(1);
    caught = broken_phi(commutator(a, b)) != commutator(broken_phi(a), broken_phi(b));
  }
  EXPECT_TRUE(caught);
}

TEST(Phi, InjectiveOnBasis) {
  for (int n = 1; n <= 2; ++n) {
    std::vector<CMatrix> images;
    for (const auto& b : real_basis_g(n)) images.push_back(phi(b.matrix));
    EXPECT_EQ(real_rank(images), images.size());
  }
}

TEST(Row4, Codec) {
  EXPECT_TRUE(row4_from_matrix(CMatrix(6, 6)).is_zero());
  Row4 r = Row4::zero(1);
  r.y[0] = Complex(1);
  const CMatrix m = row4_to_matrix(r);
  EXPECT_EQ(m(1, 0), Complex(1));  // (y_1, y_0)
  EXPECT_EQ(m(2, 1), Complex(-1));  // (y_{n+1}, y_1) = -conj(y)
  EXPECT_EQ(row4_from_matrix(m), r);
  CMatrix bad = m;
  bad(0, 1) = Complex(1);
  EXPECT_THROW(row4_from_matrix(bad), std::invalid_argument);
  for (std::uint64_t t = 0; t < 100; ++t) {
    Sampler s(derive_seed(5, "row4", t));
    Row4 v = Row4::zero(2);
    for (auto& c : v.y) c = s.complex();
    for (auto& c : v.z) c = s.complex();
    v.z_minus = s.complex();
    v.z_plus = s.complex();
    ASSERT_EQ(row4_from_matrix(row4_to_matrix(v)), v);
    ASSERT_TRUE(in_algebra(row4_to_matrix(v), 2));
  }
}

TEST(PhiMinus1, Examples) {
  // the slot holds pbar = j, so p = -j and p_v = -1
  Row4 expect = Row4::zero(1);
  expect.z_plus = Complex(1);
  EXPECT_EQ(phi_minus1(make_g_minus2(1, Quaternion::unit_j())), expect);
  EXPECT_TRUE(phi_minus1(make_g_minus2(1, Quaternion::unit_i())).is_zero());
  Row4 k = Row4::zero(1);
  k.z_minus = Complex(0, -1);
  EXPECT_EQ(phi_minus1(make_g_zero(1, Quaternion::unit_k())), k);
}

TEST(PhiMinus1, ClosedFormMatchesProjection) {
  for (std::uint64_t t = 0; t < 600; ++t) {
    Sampler s(derive_seed(5, "phi-minus1", t));
    const int n = 1 + static_cast<int>(t % 3);
    const int g = static_cast<int>(t % 6) - 2;
    const QMatrix m = g <= 2 ? s.g_element(n, g, g) : s.g_element(n);
    ASSERT_EQ(phi_minus1(m), phi_minus1_projected(m)) << to_string(m);
  }
}

TEST(PhiMinus1, ComplexLinearOnGradeMinusOne) {
  const Quaternion ibar = conj(Quaternion::unit_i());
  for (std::uint64_t t = 0; t < 200; ++t) {
    Sampler s(derive_seed(5, "linear", t));
    const HVector x = s.hvector(2);
    HVector xi(2);
    for (std::size_t a = 0; a < 2; ++a) xi[a] = x[a] * ibar;
    Row4 rotated = phi_minus1(make_g_minus1(x));
    for (auto& c : rotated.y) c = Complex(0, -1) * c;
    for (auto& c : rotated.z) c = Complex(0, -1) * c;
    rotated.z_minus = Complex(0, -1) * rotated.z_minus;
    rotated.z_plus = Complex(0, -1) * rotated.z_plus;
    ASSERT_EQ(phi_minus1(make_g_minus1(xi)), rotated);
  }
}

TEST(Filtration, GradeDecompositionExamples) {
  const CMatrix xj = phi(make_g_minus1(e1(1, Quaternion::unit_j())));
  EXPECT_FALSE(grade_project(xj, -1).is_zero());
  EXPECT_TRUE(grade_project(xj, -2).is_zero());
  const CMatrix pi = phi(make_g_minus2(1, Quaternion::unit_i()));
  EXPECT_FALSE(grade_project(pi, -2).is_zero());
  EXPECT_FALSE(grade_project(pi, 0).is_zero());
  EXPECT_TRUE(grade_project(pi, -1).is_zero());
  Sampler s(9);
  for (int t = 0; t < 50; ++t) EXPECT_GE(filtration_degree(phi(s.g_element(2, 1, 1))), 0);
}

TEST(Filtration, CompatibilityCheck) {
  const FiltrationReport r = filtration_compat_check(2, 300, 17);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.preimage_hits, 0u);
}

TEST(GroupEmbedding, EqualModSign) {
  const QMatrix g = QMatrix::identity(3);
  EXPECT_TRUE(equal_mod_sign(Phi(g), Phi(g.scaled(Rational(-1)))));
  EXPECT_FALSE(equal_mod_sign(Phi(g), Phi(g.scaled(Rational(2)))));
}
