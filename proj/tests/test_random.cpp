#include <gtest/gtest.h>

#include <set>

#include "eigmult/random.hpp"
#include "eigmult/resultant.hpp"
#include "eigmult/spectra.hpp"

using namespace eigmult;

namespace {

RandomSpec spec(std::uint64_t seed, int n, int m, TensorClass cls) {
  RandomSpec s;
  s.seed = seed;
  s.n = n;
  s.m = m;
  s.cls = cls;
  return s;
}

const TensorClass kAll[] = {TensorClass::Generic,         TensorClass::Symmetric,
                            TensorClass::RankS,           TensorClass::UpperTriangular,
                            TensorClass::QuasiTriangular, TensorClass::CoordinateEigenspace,
                            TensorClass::ZeroEigenvalue};

}  // namespace

TEST(Random, SeedsAreReproducible) {
  for (auto cls : kAll) {
    auto a = random_tensor(spec(42, 3, 3, cls));
    auto b = random_tensor(spec(42, 3, 3, cls));
    EXPECT_EQ(a.tensor, b.tensor) << to_string(cls);
    EXPECT_EQ(a.permutation, b.permutation);
  }
  EXPECT_NE(random_tensor(spec(1, 3, 3, TensorClass::Generic)).tensor,
            random_tensor(spec(2, 3, 3, TensorClass::Generic)).tensor);
}

TEST(Random, DerivedSeedsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 100; ++i) seen.insert(derive_seed(7, i));
  EXPECT_EQ(seen.size(), 100u);
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  EXPECT_NE(derive_seed(7, 3), derive_seed(8, 3));
}

TEST(Random, ClassNamesRoundTrip) {
  for (auto cls : kAll) EXPECT_EQ(parse_tensor_class(to_string(cls)), cls);
  EXPECT_THROW(parse_tensor_class("diagonal"), InputError);
}

TEST(Random, RationalRanges) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Rational r = rng.rational(9, 3);
    EXPECT_LE(abs(r.get_num()), 9);
    EXPECT_LE(r.get_den(), 3);
    EXPECT_NE(rng.nonzero_rational(2, 1), 0);
  }
}

TEST(Random, StructuredClasses) {
  auto sym = random_tensor(spec(5, 3, 3, TensorClass::Symmetric)).tensor;
  EXPECT_TRUE(is_symmetric(sym));
  auto ut = random_tensor(spec(5, 3, 3, TensorClass::UpperTriangular)).tensor;
  EXPECT_TRUE(is_upper_triangular(ut));
  auto rs = spec(5, 3, 3, TensorClass::RankS);
  rs.k = 2;
  auto g = random_tensor(rs);
  EXPECT_TRUE(is_symmetric(g.tensor));
  EXPECT_EQ(g.aux.cols(), 2u);
  auto qs = spec(5, 3, 3, TensorClass::QuasiTriangular);
  qs.k = 2;
  EXPECT_TRUE(is_quasi_triangular(random_tensor(qs).tensor, 2));
}

TEST(Random, SingularBlockGivesZeroDeterminant) {
  auto s = spec(8, 3, 3, TensorClass::QuasiTriangular);
  s.k = 2;
  s.singular_block = true;
  EXPECT_EQ(det_tensor(random_tensor(s).tensor), 0);
}

TEST(Random, PlantedEigenvalues) {
  auto z = random_tensor(spec(9, 3, 3, TensorClass::ZeroEigenvalue));
  EXPECT_EQ(det_tensor(z.tensor), 0);
  ASSERT_EQ(z.aux.cols(), 1u);
  std::vector<Rational> x0{z.aux(0, 0), z.aux(1, 0), z.aux(2, 0)};
  for (const auto& v : contract(z.tensor, x0)) EXPECT_EQ(v, 0);

  auto c = spec(9, 2, 3, TensorClass::CoordinateEigenspace);
  c.lambda = 1;
  auto ct = random_tensor(c);
  EXPECT_GE(spectrum(ct.tensor).am(1), 1);
  EXPECT_EQ(ct.permutation.size(), 2u);
}

TEST(Random, CayleyMatricesAreOrthogonal) {
  for (int n = 2; n <= 4; ++n) {
    auto q = cayley_orthogonal(static_cast<std::uint64_t>(n), n);
    EXPECT_EQ(q.transposed() * q, Matrix<Rational>::identity(n));
    EXPECT_EQ(determinant(q), 1);
  }
}

TEST(Random, RejectsBadSpecs) {
  EXPECT_THROW(random_tensor(spec(1, 0, 3, TensorClass::Generic)), InputError);
  auto q = spec(1, 3, 3, TensorClass::QuasiTriangular);
  q.k = 5;
  EXPECT_THROW(random_tensor(q), InputError);
}
