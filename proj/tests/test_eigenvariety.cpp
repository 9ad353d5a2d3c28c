#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eigmult/eigenvariety.hpp"
#include "eigmult/experiments.hpp"
#include "eigmult/random.hpp"

using namespace eigmult;

namespace {

Tensor<Rational> sample() {
  Tensor<Rational> t(3, 2);
  t.at({0, 0, 0}) = 2;
  t.at({0, 1, 1}) = 1;
  t.at({1, 1, 1}) = 1;
  return t;
}

const Gaussian kI(Rational(0), Rational(1));

bool has_point(const EigenvarietyReport& r, const ProjectivePoint& p) {
  for (const auto& c : r.components)
    if (c.point && same_point(*c.point, p)) return true;
  return false;
}

}  // namespace

TEST(Eigenvariety, SampleAtOneIsTwoConjugateLines) {
  auto r = eigenvectors_for(sample(), 1);
  EXPECT_TRUE(r.in_spectrum);
  EXPECT_TRUE(r.exact);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.kappa, 2);
  EXPECT_EQ(r.gm, 1);
  EXPECT_TRUE(has_point(r, exact_point({kI, Gaussian(1)})));
  EXPECT_TRUE(has_point(r, exact_point({-kI, Gaussian(1)})));
}

TEST(Eigenvariety, SampleAtTwoAndOutsideSpectrum) {
  auto r = eigenvectors_for(sample(), 2);
  EXPECT_EQ(r.kappa, 1);
  EXPECT_TRUE(has_point(r, exact_point({Gaussian(1), Gaussian(0)})));
  auto none = eigenvectors_for(sample(), 3);
  EXPECT_FALSE(none.in_spectrum);
  EXPECT_EQ(none.gm, 0);
  EXPECT_TRUE(none.components.empty());
}

TEST(Eigenvariety, NilpotentFixtureHasTwoLines) {
  auto r = eigenvectors_for(fixture_a(), 0);
  EXPECT_EQ(r.gm, 1);
  EXPECT_EQ(r.kappa, 2);
  EXPECT_TRUE(has_point(r, exact_point({Gaussian(1), Gaussian(0)})));
  EXPECT_TRUE(has_point(r, exact_point({Gaussian(0), Gaussian(1)})));
}

TEST(Eigenvariety, ScaledIdentityIsWholeSpace) {
  for (int n = 2; n <= 3; ++n) {
    auto t = Rational(-2, 3) * identity_tensor<Rational>(n, 3);
    auto r = eigenvectors_for(t, Rational(-2, 3));
    ASSERT_EQ(r.components.size(), 1u);
    EXPECT_TRUE(r.components[0].whole_space);
    EXPECT_EQ(r.gm, n);
    EXPECT_EQ(gm(t, 0), 0);
  }
}

TEST(Eigenvariety, RankOneTernaryKernelIsAPlane) {
  std::vector<std::vector<Rational>> vs{{1, 2, -1}};
  auto r1 = rank_one_symmetric(vs, 3, 3);
  auto r = eigenvectors_for(r1.tensor, 0);
  EXPECT_EQ(r.gm, 2);
  bool plane = false;
  for (const auto& c : r.components)
    if (c.dimension == 2 && c.factor && c.factor->degree() == 1) plane = true;
  EXPECT_TRUE(plane);
}

TEST(Eigenvariety, CoordinateSubspaceDimension) {
  RandomSpec s;
  s.seed = 4;
  s.n = 3;
  s.m = 3;
  s.cls = TensorClass::CoordinateEigenspace;
  s.k = 2;
  s.lambda = 1;
  auto t = random_tensor(s).tensor;
  EXPECT_GE(gm(t, 1), 2);
}

TEST(Eigenvariety, KernelCheckForLowRank) {
  std::vector<std::vector<Rational>> vs{{1, 0, 2}, {0, 1, 1}};
  auto r = rank_one_symmetric(vs, 3, 3);
  auto kc = kernel_check(r.tensor, r.factors);
  EXPECT_TRUE(kc.holds);
  EXPECT_TRUE(kc.full_column_rank);
  EXPECT_EQ(kc.kernel_dim, 1u);
  EXPECT_THROW(kernel_check(r.tensor, Matrix<Rational>(2, 2)), DimensionError);
}

TEST(Eigenvariety, EigenSystemSubtractsPowers) {
  auto fs = eigen_system(sample(), 1);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(to_string(fs[0]), "x1^2 + x2^2");
  EXPECT_TRUE(fs[1].is_zero());
}

TEST(Eigenvariety, BinaryFormPoints) {
  QForm g(2, 2);
  g.add_term({1, 1}, 1);
  auto pts = binary_form_points(g);
  EXPECT_EQ(pts.size(), 2u);
  EXPECT_THROW(binary_form_points(QForm(2, 2)), InputError);
  EXPECT_THROW(binary_form_points(QForm(3, 2)), DimensionError);
}

TEST(Eigenvariety, NumericRotatedFixture) {
  auto b = fixture_b();
  const double r = 1.0 / std::numbers::sqrt2;
  for (Complex lambda : {Complex(0.0), Complex(-r)}) {
    auto rep = eigenvectors_numeric(b, lambda);
    EXPECT_FALSE(rep.exact);
    EXPECT_GE(rep.kappa, 1);
    EXPECT_EQ(rep.gm, 1);
    EXPECT_LT(rep.max_residual, 1e-8);
    for (const auto& c : rep.components) {
      ASSERT_TRUE(c.point.has_value());
      EXPECT_LT(eigen_residual(b, lambda, c.point->approx), 1e-8);
    }
  }
}

TEST(Eigenvariety, SamePointIsProjective) {
  auto a = numeric_point({Complex(2.0), Complex(0.0, 4.0)});
  auto b = numeric_point({Complex(0.0, -1.0), Complex(2.0)});
  EXPECT_TRUE(same_point(a, b));
  auto c = numeric_point({Complex(1.0), Complex(1.0)});
  EXPECT_FALSE(same_point(a, c));
  EXPECT_THROW(numeric_point({Complex(0.0), Complex(0.0)}), InputError);
  EXPECT_EQ(exact_point({Gaussian(2), Gaussian(4)}).coords, exact_point({Gaussian(1), Gaussian(2)}).coords);
}

TEST(Eigenvariety, ResidualOfTrueEigenvector) {
  auto t = tensor_cast<double>(sample());
  std::vector<Complex> x{Complex(0.0, 1.0), Complex(1.0)};
  EXPECT_LT(eigen_residual(t, Complex(1.0), x), 1e-14);
  EXPECT_GT(eigen_residual(t, Complex(3.0), x), 0.1);
}
