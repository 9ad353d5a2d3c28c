#include <gtest/gtest.h>

#include "eigmult/eigenvariety.hpp"
#include "eigmult/experiments.hpp"
#include "eigmult/random.hpp"
#include "eigmult/resultant.hpp"
#include "eigmult/spectra.hpp"
#include "oracles.hpp"

using namespace eigmult;

namespace {

struct Shape {
  int n, m;
};

const Shape kShapes[] = {{2, 3}, {2, 4}, {3, 3}};

Tensor<Rational> draw(std::uint64_t seed, Shape s, TensorClass cls = TensorClass::Generic) {
  RandomSpec spec;
  spec.seed = seed;
  spec.n = s.n;
  spec.m = s.m;
  spec.cls = cls;
  return random_tensor(spec).tensor;
}

}  // namespace

TEST(Properties, EsymKeepsContraction) {
  for (std::uint64_t i = 0; i < 12; ++i) {
    Shape s = kShapes[i % 3];
    auto t = draw(derive_seed(101, i), s);
    Rng rng(i);
    std::vector<Rational> x(static_cast<std::size_t>(s.n));
    for (auto& v : x) v = rng.rational(9, 4);
    EXPECT_EQ(contract(esym(t), x), oracle::brute_contract(t, x));
  }
}

TEST(Properties, MultiplicitiesSumToDegree) {
  for (std::uint64_t i = 0; i < 9; ++i) {
    Shape s = kShapes[i % 3];
    auto sp = spectrum(draw(derive_seed(202, i), s, i % 2 ? TensorClass::Symmetric : TensorClass::Generic));
    EXPECT_EQ(sp.eigs.total_multiplicity(), charpoly_degree(s.n, s.m));
  }
}

TEST(Properties, TraceIsSecondCoefficient) {
  // Sum of eigenvalues with multiplicity equals the trace.
  for (std::uint64_t i = 0; i < 6; ++i) {
    Shape s = kShapes[i % 3];
    auto t = draw(derive_seed(303, i), s);
    auto chi = char_poly(t);
    EXPECT_EQ(-chi.coeff(chi.degree() - 1), trace(t));
  }
}

TEST(Properties, ConstantTermIsDeterminant) {
  for (std::uint64_t i = 0; i < 6; ++i) {
    Shape s = kShapes[i % 3];
    auto t = draw(derive_seed(404, i), s);
    EXPECT_EQ(char_poly(t).coeff(0), det_tensor(Rational(-1) * t));
  }
}

TEST(Properties, EigenvaluesOfSubtensorsDivide) {
  for (std::uint64_t i = 0; i < 6; ++i) {
    RandomSpec spec;
    spec.seed = derive_seed(505, i);
    spec.n = 3;
    spec.m = 3;
    spec.cls = TensorClass::UpperTriangular;
    auto t = random_tensor(spec).tensor;
    auto chi = char_poly(t);
    for (int k = 0; k < 3; ++k)
      EXPECT_GE(oracle::root_multiplicity(chi, t.at({k, k, k})), 1);
  }
}

TEST(Properties, DistinctEigenvaluesShareNoEigenvector) {
  for (std::uint64_t i = 0; i < 6; ++i) {
    auto t = draw(derive_seed(606, i), {2, 3}, TensorClass::Symmetric);
    auto sp = spectrum(t);
    std::vector<std::pair<Rational, EigenvarietyReport>> reps;
    for (const auto& r : sp.eigs.roots)
      if (r.exact) reps.emplace_back(r.exact_value, eigenvectors_for(t, r.exact_value));
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b)
        for (const auto& ca : reps[a].second.components)
          for (const auto& cb : reps[b].second.components)
            if (ca.point && cb.point) EXPECT_FALSE(same_point(*ca.point, *cb.point));
  }
}

TEST(Properties, WholeSpaceOnlyForScalarTensors) {
  for (std::uint64_t i = 0; i < 6; ++i) {
    Shape s = kShapes[i % 3];
    Rational mu = Rng(i).rational(5, 3);
    auto scalar = mu * identity_tensor<Rational>(s.n, s.m);
    auto r = eigenvectors_for(scalar, mu);
    ASSERT_FALSE(r.components.empty());
    EXPECT_TRUE(r.components[0].whole_space);
    EXPECT_EQ(esym(scalar), scalar);
    auto t = draw(derive_seed(707, i), s);
    for (Rational lambda : {Rational(0), mu})
      for (const auto& c : eigenvectors_for(t, lambda).components) EXPECT_FALSE(c.whole_space);
  }
}

TEST(Properties, GeometricMultiplicityInvariantUnderOrthogonalAction) {
  for (std::uint64_t i = 0; i < 4; ++i) {
    RandomSpec spec;
    spec.seed = derive_seed(808, i);
    spec.n = 2 + static_cast<int>(i % 2);
    spec.m = 3;
    spec.cls = TensorClass::ZeroEigenvalue;
    auto t = random_tensor(spec).tensor;
    auto q = cayley_orthogonal(derive_seed(809, i), spec.n);
    auto base = eigenvectors_for(t, 0);
    auto moved = eigenvectors_for(action(q, t), 0);
    EXPECT_EQ(base.gm, moved.gm);
    EXPECT_EQ(base.kappa, moved.kappa);
  }
}

TEST(Properties, StrongBoundOnMixedClasses) {
  for (std::uint64_t i = 0; i < 7; ++i) {
    RandomSpec spec;
    spec.seed = derive_seed(909, i);
    spec.n = 2;
    spec.m = 3;
    spec.cls = static_cast<TensorClass>(i);
    spec.lambda = 1;
    for (const auto& v : check_conjecture_all(random_tensor(spec).tensor)) {
      EXPECT_TRUE(v.strong_holds) << to_string(spec.cls);
      EXPECT_TRUE(v.weak_holds);
      EXPECT_LE(v.gm, 2);
    }
  }
}

TEST(Properties, SeedsReproduceReports) {
  VerifyOptions o;
  o.trials = 3;
  o.seed = 77;
  o.n = 3;
  EXPECT_EQ(verify("conjecture", o).dump(), verify("conjecture", o).dump());
}
