#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "eigmult/random.hpp"
#include "eigmult/resultant.hpp"
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

Tensor<Rational> random_general(std::uint64_t seed, int n, int m) {
  RandomSpec s;
  s.seed = seed;
  s.n = n;
  s.m = m;
  return random_tensor(s).tensor;
}

}  // namespace

TEST(Resultant, SampleDeterminantIsFour) { EXPECT_EQ(det_tensor(sample()), 4); }

TEST(Resultant, SylvesterMatchesLaplaceOracle) {
  for (int seed = 1; seed <= 8; ++seed) {
    auto t = random_general(seed, 2, 3 + seed % 2);
    auto fs = slice_forms(t);
    Rational expect = oracle::sylvester(oracle::binary_slice(t, 0), oracle::binary_slice(t, 1));
    EXPECT_EQ(sylvester_resultant(fs[0], fs[1]), expect) << "seed " << seed;
    EXPECT_EQ(det_tensor(t), expect);
  }
}

TEST(Resultant, PowersOfVariablesHaveUnitResultant) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      if (n == 4 && d == 3) continue;
      std::vector<QForm> fs;
      for (int i = 0; i < n; ++i) fs.push_back(QForm::power(n, i, d));
      EXPECT_EQ(resultant<Rational>(fs), 1) << "n=" << n << " d=" << d;
    }
}

TEST(Resultant, ScaledIdentityHomogeneity) {
  // Res is homogeneous of degree d^(n-1) in each form.
  for (int n = 2; n <= 3; ++n)
    for (int m = 2; m <= 4; ++m) {
      auto t = Rational(2) * identity_tensor<Rational>(n, m);
      Rational expect = 1;
      const int d = m - 1;
      for (int k = 0; k < n * static_cast<int>(ipow(d, n - 1)); ++k) expect *= 2;
      EXPECT_EQ(det_tensor(t), expect) << "n=" << n << " m=" << m;
    }
}

TEST(Resultant, MatrixCaseEqualsDeterminant) {
  Rng rng(5);
  for (int n = 1; n <= 4; ++n) {
    auto a = random_matrix(rng, n, n);
    Tensor<Rational> t(2, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.at({i, j}) = a(i, j);
    EXPECT_EQ(det_tensor(t), oracle::laplace_det(a)) << "n=" << n;
  }
}

TEST(Resultant, SharedZeroGivesZero) {
  // Forms vanishing at (1, -1, 2).
  std::vector<QForm> fs;
  std::vector<Rational> p{1, -1, 2};
  Rng rng(9);
  for (int i = 0; i < 3; ++i) {
    QForm f(3, 2);
    for (const auto& e : monomials(3, 2)) f.add_term(e, rng.rational(9, 3));
    Rational v = f.evaluate<Rational>(std::span<const Rational>(p));
    f.add_term({2, 0, 0}, -v);
    fs.push_back(f);
  }
  EXPECT_EQ(resultant<Rational>(fs), 0);
}

TEST(Resultant, OrderingsAgreeWhenRatioDefined) {
  auto t = random_general(21, 3, 3);
  auto fs = slice_forms(t);
  std::vector<int> ord{0, 1, 2};
  std::optional<Rational> first;
  do {
    auto r = macaulay_ratio<Rational>(fs, ord);
    if (!r) continue;
    if (!first) first = r;
    EXPECT_EQ(*r, *first);
  } while (std::next_permutation(ord.begin(), ord.end()));
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(det_tensor(t), *first);
}

TEST(Resultant, DegenerateMinorFallsBack) {
  // x1^2, x2^2 and a form whose Macaulay minor is singular for the identity
  // ordering; the value must still equal the line-trick result.
  std::vector<QForm> fs{QForm::power(3, 0, 2), QForm::power(3, 1, 2), QForm::power(3, 2, 2)};
  fs[2].add_term({1, 1, 0}, 1);
  EXPECT_EQ(resultant<Rational>(fs), 1);
}

TEST(Resultant, SymmetrizationKeepsDeterminant) {
  for (int seed = 1; seed <= 5; ++seed) EXPECT_TRUE(det_symmetrization_check(random_general(seed, 3, 3)));
}

TEST(Resultant, FloatDeterminantCloseToExact) {
  auto t = random_general(4, 3, 3);
  double exact = det_tensor(t).get_d();
  double approx = det_tensor(tensor_cast<double>(t));
  EXPECT_NEAR(approx / exact, 1.0, 1e-8);
}

TEST(Resultant, MacaulayShapeAndCsv) {
  auto fs = slice_forms(identity_tensor<Rational>(3, 3));
  std::vector<int> ord{0, 1, 2};
  auto mm = macaulay_matrix<Rational>(fs, ord);
  EXPECT_EQ(mm.target_degree, 4);
  EXPECT_EQ(mm.matrix.rows(), monomial_count(3, 4));
  EXPECT_EQ(monomial_count(3, 4), 15u);
  auto csv = macaulay_csv(mm);
  EXPECT_EQ(csv.rfind("row,form,multiplier,in_minor,x1^4", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 16);
}

TEST(Resultant, RejectsBadSystems) {
  std::vector<QForm> mixed{QForm::power(2, 0, 2), QForm::power(2, 1, 3)};
  EXPECT_THROW(resultant<Rational>(mixed), InputError);
  std::vector<QForm> wrong_count{QForm::power(3, 0, 2), QForm::power(3, 1, 2)};
  EXPECT_THROW(resultant<Rational>(wrong_count), InputError);
  EXPECT_THROW(det_tensor(Tensor<Rational>(3, 5)), InputError);
}
