#include "qctw/graded_lie.hpp"
#include "qctw/sampling.hpp"

#include <gtest/gtest.h>

using namespace qctw;

namespace {

HVector e1(int n, const Quaternion& q) {
  HVector v(n);
  v[0] = q;
  return v;
}

}  // namespace

TEST(HermitianForms, ReproduceDisplayedForms) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Sampler s(derive_seed(11, "forms", t));
    const int n = 1 + static_cast<int>(t % 3);
    const HVector x = s.hvector(n + 2);
    ASSERT_EQ(evaluate_form(form_Q(n), x), displayed_Q(x));
    const CVector yz = identify_vector(x);
    const CVector y(yz.begin(), yz.begin() + n + 2), z(yz.begin() + n + 2, yz.end());
    ASSERT_EQ(evaluate_form(form_Qtilde(n), yz), displayed_Qtilde(y, z));
  }
}

TEST(InAlgebra, Examples) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(in_algebra(grading_element(n), n));
    EXPECT_TRUE(in_algebra(grading_element_tilde(n), n));
    EXPECT_FALSE(in_algebra(QMatrix::identity(g_size(n)), n));
    EXPECT_FALSE(in_algebra(CMatrix::identity(gt_size(n)), n));
  }
  EXPECT_THROW(in_algebra(QMatrix::identity(4), 1), std::invalid_argument);
}

TEST(Bracket, Examples) {
  const QMatrix br = commutator(make_g_minus1(e1(1, Quaternion(1))), make_g_minus1(e1(1, conj(Quaternion::unit_i()))));
  EXPECT_EQ(br, make_g_minus2(1, Quaternion(0, 2, 0, 0)));
  const QMatrix x = make_g_minus1(e1(1, Quaternion(1, 2, 3, 4)));
  EXPECT_EQ(commutator(grading_element(1), x), x.scaled(Rational(-1)));
  EXPECT_TRUE(commutator(x, x).is_zero());
}

TEST(GradedElement, RejectsOutsideAlgebra) {
  EXPECT_THROW(GElement(QMatrix::identity(3)), std::invalid_argument);
  EXPECT_NO_THROW(GElement(grading_element(1)));
}

TEST(GradeProject, Examples) {
  const QMatrix p = make_g_minus2(2, Quaternion(0, 1, -2, 3));
  EXPECT_EQ(grade_project(p, -2), p);
  EXPECT_EQ(grade_project(grading_element(2), 0), grading_element(2));
  EXPECT_THROW(grade_project(p, 3), std::out_of_range);
  EXPECT_THROW(grade_project(p, -3), std::out_of_range);
}

TEST(GradeProject, ComponentsSumAndMatchBlocks) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Sampler s(derive_seed(11, "components", t));
    const int n = 1 + static_cast<int>(t % 3);
    const GElement m(s.g_element(n));
    QMatrix sum(g_size(n), g_size(n));
    for (int k = kMinGrade; k <= kMaxGrade; ++k) {
      ASSERT_EQ(m.component(k), block_project(m.matrix(), k));
      sum += m.component(k);
    }
    ASSERT_EQ(sum, m.matrix());
  }
}

TEST(FiltrationDegree, Examples) {
  EXPECT_EQ(filtration_degree(make_g_minus1(e1(2, Quaternion::unit_j()))), -1);
  EXPECT_EQ(filtration_degree(make_g_minus2(1, Quaternion::unit_i()) + make_g_zero(1, Quaternion::unit_k())), -2);
  EXPECT_EQ(filtration_degree(QMatrix(3, 3)), 2);
  EXPECT_EQ(filtration_degree(make_g_plus2(1, Quaternion::unit_i())), 2);
}

TEST(Parabolic, EqualsLineStabilizer) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Sampler s(derive_seed(11, "parabolic", t));
    const int n = 1 + static_cast<int>(t % 3);
    const int lo = static_cast<int>(s.integer(-2, 2));
    const QMatrix m = s.g_element(n, lo, 2);
    ASSERT_EQ(stabilizes_line(m), filtration_degree(m) >= 0) << to_string(m);
    ASSERT_EQ(GElement(m).in_parabolic(), filtration_degree(m) >= 0);
  }
}

TEST(GradingLaws, BracketRespectsGrades) {
  for (std::uint64_t t = 0; t < 500; ++t) {
    Sampler s(derive_seed(11, "grading", t));
    const int n = 1 + static_cast<int>(t % 3);
    const int i = static_cast<int>(s.integer(-2, 2)), j = static_cast<int>(s.integer(-2, 2));
    const QMatrix b = commutator(s.g_element(n, i, i), s.g_element(n, j, j));
    for (int m = kMinGrade; m <= kMaxGrade; ++m)
      if (m != i + j) ASSERT_TRUE(grade_project(b, m).is_zero()) << i << ' ' << j << ' ' << m;
  }
}

TEST(GradingLaws, Jacobi) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Sampler s(derive_seed(11, "jacobi", t));
    const int n = 1 + static_cast<int>(t % 2);
    const QMatrix a = s.g_element(n), b = s.g_element(n), c = s.g_element(n);
    const QMatrix sum = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    ASSERT_TRUE(sum.is_zero());
    ASSERT_TRUE(in_algebra(commutator(a, b), n));
  }
}

TEST(Dimensions, GradesAndTotals) {
  for (int n = 1; n <= 3; ++n) {
    const std::size_t dim = static_cast<std::size_t>((n + 2) * (2 * n + 5));
    EXPECT_EQ(grade_dimension_g(n, -1), std::size_t(4 * n));
    EXPECT_EQ(grade_dimension_g(n, -2), 3u);
    EXPECT_EQ(grade_dimension_gtilde(n, -1), std::size_t(4 * n + 4));
    EXPECT_EQ(grade_dimension_gtilde(n, -2), 1u);
    EXPECT_EQ(real_basis_g(n).size(), dim);
    EXPECT_EQ(solution_space_dimension_g(n), dim);
  }
}

TEST(BracketTable, ExampleRowAndRebuild) {
  const auto basis = real_basis_g(1);
  const auto rows = bracket_table(1);
  std::size_t a = basis.size(), b = basis.size();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].matrix == make_g_minus1(e1(1, Quaternion(1)))) a = k;
    if (basis[k].matrix == make_g_minus1(e1(1, -Quaternion::unit_i()))) b = k;
  }
  ASSERT_LT(a, basis.size());
  ASSERT_LT(b, basis.size());
  EXPECT_EQ(assemble_bracket(1, rows, a, b), make_g_minus2(1, Quaternion(0, 2, 0, 0)));
  for (std::size_t i = 0; i < basis.size(); i += 3)
    for (std::size_t j = 0; j < basis.size(); j += 2)
      if (i != j) ASSERT_EQ(assemble_bracket(1, rows, i, j), commutator(basis[i].matrix, basis[j].matrix));
}
