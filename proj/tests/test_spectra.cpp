#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eigmult/experiments.hpp"
#include "eigmult/random.hpp"
#include "eigmult/resultant.hpp"
#include "eigmult/spectra.hpp"
#include "oracles.hpp"

using namespace eigmult;

namespace {

Tensor<Rational> sample() {
  Tensor<Rational> t(3, 2);
  t.at({0, 0, 0}) = 2;
  t.at({0, 1, 1}) = 1;
  t.at({1, 1, 1}) = 1;
  return t;
}

RandomSpec spec(std::uint64_t seed, int n, int m, TensorClass cls = TensorClass::Generic) {
  RandomSpec s;
  s.seed = seed;
  s.n = n;
  s.m = m;
  s.cls = cls;
  return s;
}

}  // namespace

TEST(CharPoly, DegreeFormula) {
  EXPECT_EQ(charpoly_degree(2, 3), 4);
  EXPECT_EQ(charpoly_degree(3, 3), 12);
  EXPECT_EQ(charpoly_degree(2, 4), 6);
  EXPECT_EQ(charpoly_degree(4, 2), 4);
}

TEST(CharPoly, SampleIsFrozen) {
  QPoly expect(std::vector<Rational>{4, -12, 13, -6, 1});
  EXPECT_EQ(char_poly(sample()), expect);
  auto s = spectrum(sample());
  EXPECT_EQ(s.am(1), 2);
  EXPECT_EQ(s.am(2), 2);
  EXPECT_EQ(s.am(3), 0);
}

TEST(CharPoly, ScaledIdentityIsPurePower) {
  for (int n = 2; n <= 3; ++n)
    for (int m = 3; m <= 4; ++m) {
      if (n == 3 && m == 4) continue;
      for (Rational mu : {Rational(0), Rational(1), Rational(-2, 3)}) {
        auto t = mu * identity_tensor<Rational>(n, m);
        EXPECT_EQ(char_poly(t), pow(QPoly::linear_root(mu), charpoly_degree(n, m)));
      }
    }
}

TEST(CharPoly, BinaryMatchesSylvesterOracle) {
  for (int seed = 1; seed <= 6; ++seed) {
    auto t = random_tensor(spec(seed, 2, 3 + seed % 2)).tensor;
    EXPECT_EQ(char_poly(t), oracle::binary_charpoly(t)) << "seed " << seed;
  }
}

TEST(CharPoly, OrderTwoMatchesMatrixOracle) {
  Rng rng(17);
  for (int n = 1; n <= 4; ++n) {
    auto a = random_matrix(rng, n, n);
    Tensor<Rational> t(2, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.at({i, j}) = a(i, j);
    auto expect = oracle::matrix_charpoly(a);
    EXPECT_EQ(char_poly(t), expect);
    EXPECT_EQ(matrix_charpoly(a), expect);
  }
}

TEST(CharPoly, ConstantTermIsDeterminantOfNegative) {
  for (int seed = 1; seed <= 4; ++seed) {
    auto t = random_tensor(spec(seed, 3, 3)).tensor;
    auto chi = char_poly(t);
    EXPECT_EQ(chi.coeff(0), det_tensor(Rational(-1) * t));
    EXPECT_EQ(chi.coeff(chi.degree()), 1);
  }
}

TEST(CharPoly, UpperTriangularFormula) {
  for (int seed = 1; seed <= 4; ++seed) {
    auto t = random_tensor(spec(seed, 2 + seed % 2, 3, TensorClass::UpperTriangular)).tensor;
    EXPECT_EQ(char_poly(t), upper_triangular_charpoly(t));
  }
  EXPECT_THROW(upper_triangular_charpoly(random_tensor(spec(1, 2, 3)).tensor), InputError);
}

TEST(CharPoly, NilpotentFixtureAndRotatedCopy) {
  EXPECT_EQ(char_poly(fixture_a()), QPoly::monomial(Rational(1), 4));
  auto nb = char_poly_numeric(fixture_b());
  const double r = 1.0 / std::numbers::sqrt2;
  std::vector<double> expect{0.0, 0.0, 0.5, 2 * r, 1.0};
  ASSERT_EQ(nb.poly.degree(), 4);
  for (int k = 0; k <= 4; ++k) EXPECT_NEAR(nb.poly.coeff(k), expect[k], 1e-9) << "k=" << k;
  auto s = spectrum(fixture_b());
  EXPECT_EQ(s.mode, Mode::Numeric);
  EXPECT_EQ(s.am_near(Complex(0.0), 1e-6), 2);
  EXPECT_EQ(s.am_near(Complex(-r), 1e-6), 2);
  EXPECT_THROW(s.am(0), InputError);
}

TEST(CharPoly, NumericAgreesWithExactOnRandomTensors) {
  for (int seed = 1; seed <= 3; ++seed) {
    auto t = random_tensor(spec(seed, 3, 3)).tensor;
    auto exact = char_poly(t);
    auto num = char_poly_numeric(tensor_cast<double>(t));
    for (int k = 0; k <= exact.degree(); ++k) {
      double e = exact.coeff(k).get_d();
      double scale = std::max(1.0, std::abs(e));
      EXPECT_NEAR(num.poly.coeff(k) / scale, e / scale, 1e-6) << "seed " << seed << " k=" << k;
    }
  }
}

TEST(CharPoly, MultiplicitiesSumToDegree) {
  for (int seed = 1; seed <= 5; ++seed) {
    auto s = spectrum(random_tensor(spec(seed, 2, 4, TensorClass::Symmetric)).tensor);
    EXPECT_EQ(s.eigs.total_multiplicity(), s.degree);
    EXPECT_TRUE(s.eigs.exact_multiplicities);
  }
}
