#include <gtest/gtest.h>

#include <numbers>

#include "eigmult/experiments.hpp"

using namespace eigmult;

namespace {

Tensor<Rational> sample() {
  Tensor<Rational> t(3, 2);
  t.at({0, 0, 0}) = 2;
  t.at({0, 1, 1}) = 1;
  t.at({1, 1, 1}) = 1;
  return t;
}

}  // namespace

TEST(Conjecture, TermValues) {
  EXPECT_EQ(conjecture_term(0, 3), 0);
  EXPECT_EQ(conjecture_term(1, 3), 1);
  EXPECT_EQ(conjecture_term(2, 3), 4);
  EXPECT_EQ(conjecture_term(3, 3), 12);
  EXPECT_EQ(conjecture_term(2, 4), 6);
  EXPECT_EQ(conjecture_term(3, 2), 3);
}

TEST(Conjecture, SampleVerdictIsTight) {
  auto v = check_conjecture(sample(), 1);
  EXPECT_TRUE(v.exact);
  EXPECT_EQ(v.am, 2);
  EXPECT_EQ(v.gm, 1);
  EXPECT_EQ(v.dims, (std::vector<int>{1, 1}));
  EXPECT_EQ(v.strong_bound, 2);
  EXPECT_EQ(v.weak_bound, 1);
  EXPECT_TRUE(v.strong_holds);
  EXPECT_TRUE(v.weak_holds);
  auto j = verdict_json(v);
  EXPECT_EQ(j["equality"], true);
  EXPECT_EQ(j["lambda"], "1");
}

TEST(Conjecture, OutsideSpectrumIsVacuous) {
  auto v = check_conjecture(sample(), 5);
  EXPECT_EQ(v.am, 0);
  EXPECT_EQ(v.gm, 0);
  EXPECT_TRUE(v.dims.empty());
  EXPECT_TRUE(v.strong_holds);
}

TEST(Conjecture, ScaledIdentityAttainsBound) {
  auto t = Rational(3) * identity_tensor<Rational>(2, 3);
  auto v = check_conjecture(t, 3);
  EXPECT_EQ(v.am, 4);
  EXPECT_EQ(v.gm, 2);
  EXPECT_EQ(v.strong_bound, 4);
  EXPECT_TRUE(v.strong_holds);
}

TEST(Conjecture, AllEigenvaluesCoverSpectrum) {
  auto vs = check_conjecture_all(sample());
  ASSERT_EQ(vs.size(), 2u);
  int total = 0;
  for (const auto& v : vs) {
    total += v.am;
    EXPECT_TRUE(v.strong_holds);
  }
  EXPECT_EQ(total, 4);
}

TEST(Conjecture, RotatedFixtureNumeric) {
  auto b = fixture_b();
  auto vs = check_conjecture_all(b);
  ASSERT_EQ(vs.size(), 2u);
  for (const auto& v : vs) {
    EXPECT_FALSE(v.exact);
    EXPECT_EQ(v.am, 2);
    EXPECT_TRUE(v.strong_holds);
  }
}

TEST(Conjecture, MinimizerKeepsOnlyNeededEntries) {
  auto t = Rational(2) * identity_tensor<Rational>(2, 3);
  t.set_kind(TensorKind::General);
  t.at({0, 1, 0}) = 7;
  auto pred = [](const Tensor<Rational>& x) { return x.at({1, 1, 1}) != 0; };
  auto small = minimize_counterexample(t, pred);
  for (std::size_t lin = 0; lin < small.size(); ++lin)
    EXPECT_EQ(small[lin] != 0, lin == small.linear_index(std::vector<int>{1, 1, 1}));
  auto throwing = [](const Tensor<Rational>& x) -> bool {
    if (x.at({0, 0, 0}) == 0) throw EngineError("boom");
    return true;
  };
  EXPECT_EQ(minimize_counterexample(t, throwing).at({0, 0, 0}), 2);
}

TEST(Experiments, MatrixCharpolyFaddeevLeVerrier) {
  Matrix<Rational> a(2, 2, {1, 2, 3, 4});
  EXPECT_EQ(matrix_charpoly(a), QPoly(std::vector<Rational>{-2, -5, 1}));
}

TEST(Experiments, IdentityRuns) {
  auto j = identity_experiment(2, 3, {Rational(0), Rational(1), Rational(-2, 3)});
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Experiments, OrbitRequiresSingularTensor) {
  auto shifted = identity_tensor<Rational>(2, 3);
  EXPECT_THROW(orbit_experiment(shifted, 2, 1), InputError);
  auto j = orbit_experiment(fixture_a(), 3, 1);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Experiments, SmallRunsPass) {
  RandomSpec low;
  low.seed = 3;
  low.n = 2;
  low.m = 3;
  low.cls = TensorClass::RankS;
  low.k = 1;
  EXPECT_TRUE(lowrank_experiment(low, 4)["pass"].get<bool>());
  EXPECT_TRUE(quasi_triangular_experiment(3, 3, 3, 3)["pass"].get<bool>());
  EXPECT_TRUE(symmetrization_experiment(3, 2, 4, 3)["pass"].get<bool>());
  EXPECT_TRUE(coordinate_case_experiment(1, 1, 3, 2, 3, 2)["pass"].get<bool>());
  RandomSpec gen;
  gen.seed = 3;
  EXPECT_TRUE(generic_experiment(gen, 5)["pass"].get<bool>());
  EXPECT_TRUE(conjecture_experiment(3, 2, 3, 7)["pass"].get<bool>());
  EXPECT_TRUE(matrix_crosscheck_experiment(3, 5)["pass"].get<bool>());
  EXPECT_TRUE(triangular_crosscheck_experiment(3, 3)["pass"].get<bool>());
}

TEST(Experiments, VerifyDispatch) {
  VerifyOptions o;
  o.trials = 3;
  o.seed = 2;
  auto j = verify("conjecture", o);
  EXPECT_EQ(j["prop"], "conjecture");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_THROW(verify("9.9", o), InputError);
  o.trials = -1;
  EXPECT_THROW(verify("conjecture", o), InputError);
  EXPECT_GE(verify_props().size(), 10u);
}

TEST(Experiments, ReportsAreDeterministic) {
  VerifyOptions o;
  o.trials = 4;
  o.seed = 11;
  EXPECT_EQ(verify("engine", o).dump(), verify("engine", o).dump());
}
