// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "eigmult/eigenvariety.hpp"
#include "eigmult/experiments.hpp"
#include "eigmult/spectra.hpp"

using namespace eigmult;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

bool passed(const Json& j) { return j.value("pass", false); }

Tensor<Rational> sample() {
  Tensor<Rational> t(3, 2);
  t.at({0, 0, 0}) = 2;
  t.at({0, 1, 1}) = 1;
  t.at({1, 1, 1}) = 1;
  return t;
}

RandomSpec spec_of(std::uint64_t seed, int n, int m, TensorClass cls, int k = 1) {
  RandomSpec s;
  s.seed = seed;
  s.n = n;
  s.m = m;
  s.cls = cls;
  s.k = k;
  return s;
}

Outcome identity_charpolys() {
  Outcome o;
  const int shapes[][2] = {{2, 3}, {2, 4}, {3, 3}};
  for (auto [n, m] : shapes)
    for (const Rational& mu : {Rational(0), Rational(1), Rational(-2, 3)}) {
      auto t0 = Clock::now();
      auto j = identity_experiment(n, m, {mu});
      double dt = seconds_since(t0);
      std::ostringstream w;
      w << "(" << n << "," << m << ") mu=" << to_string(mu);
      note(o, passed(j), w.str() + " mismatch");
      note(o, dt < 1.0, w.str() + " too slow");
    }
  return o;
}

Outcome fixture_pair() {
  Outcome o;
  note(o, char_poly(fixture_a()) == QPoly::monomial(Rational(1), 4), "exact charpoly of A is not lambda^4");
  auto b = fixture_b();
  auto nb = char_poly_numeric(b);
  const double r = 1.0 / std::numbers::sqrt2;
  const double expect[] = {0.0, 0.0, 0.5, 2 * r, 1.0};
  double err = 0.0;
  for (int k = 0; k <= 4; ++k) err = std::max(err, std::abs(nb.poly.coeff(k) - expect[k]));
  note(o, nb.poly.degree() == 4 && err <= 1e-9, "numeric charpoly of B off by " + std::to_string(err));
  auto s = spectrum(b);
  note(o, s.am_near(Complex(0.0), 1e-6) == 2, "am of 0 in B is not 2");
  note(o, s.am_near(Complex(-r), 1e-6) == 2, "am of -1/sqrt2 in B is not 2");
  return o;
}

Outcome worked_example() {
  Outcome o;
  note(o, char_poly(sample()) == QPoly(std::vector<Rational>{4, -12, 13, -6, 1}), "charpoly mismatch");
  auto ev = eigenvectors_for(sample(), 1);
  const Gaussian i(Rational(0), Rational(1));
  auto want1 = exact_point({i, Gaussian(1)});
  auto want2 = exact_point({-i, Gaussian(1)});
  bool found1 = false, found2 = false;
  for (const auto& c : ev.components) {
    if (!c.point || c.dimension != 1) continue;
    found1 = found1 || same_point(*c.point, want1);
    found2 = found2 || same_point(*c.point, want2);
  }
  note(o, ev.components.size() == 2 && found1 && found2, "V(1) is not the two lines through (+-i, 1)");
  auto v = check_conjecture(sample(), 1);
  note(o, v.strong_bound == 2 && v.am == 2 && v.strong_holds, "strong bound at 1 is not 2 = am");
  return o;
}

Outcome orbit() {
  Outcome o;
  auto t0 = Clock::now();
  auto j = orbit_suite(20, 1);
  double dt = seconds_since(t0);
  note(o, passed(j), "orbit invariance failed");
  note(o, dt < 30.0, "took " + std::to_string(dt) + " s");
  return o;
}

Outcome lowrank() {
  Outcome o;
  auto t0 = Clock::now();
  const int cases[][3] = {{2, 3, 1}, {3, 3, 1}, {3, 3, 2}};
  for (auto [n, m, s] : cases) {
    auto j = lowrank_experiment(spec_of(1000 + static_cast<std::uint64_t>(10 * n + s), n, m, TensorClass::RankS, s), 50);
    note(o, passed(j), "rank " + std::to_string(s) + " n=" + std::to_string(n) + " failed");
  }
  double dt = seconds_since(t0);
  note(o, dt < 120.0, "took " + std::to_string(dt) + " s");
  return o;
}

Outcome quasi_triangular() {
  Outcome o;
  const int shapes[][3] = {{2, 3, 17}, {3, 3, 17}, {2, 4, 16}};
  for (auto [n, m, count] : shapes) {
    note(o, passed(quasi_triangular_experiment(2000 + n * 10 + m, n, m, count)),
         "quasi-triangular (" + std::to_string(n) + "," + std::to_string(m) + ") failed");
    note(o, passed(symmetrization_experiment(3000 + n * 10 + m, n, m, count)),
         "symmetrization (" + std::to_string(n) + "," + std::to_string(m) + ") failed");
  }
  return o;
}

Outcome coordinate() {
  Outcome o;
  const int cases[][3] = {{2, 3, 1}, {3, 3, 2}, {2, 4, 1}};
  for (auto [n, m, k] : cases)
    note(o, passed(coordinate_case_experiment(k, Rational(1), 4000 + n * 10 + m, n, m, 20)),
         "k=" + std::to_string(k) + " (" + std::to_string(n) + "," + std::to_string(m) + ") failed");
  return o;
}

Outcome generic() {
  Outcome o;
  auto t0 = Clock::now();
  note(o, passed(generic_experiment(spec_of(5001, 2, 3, TensorClass::Generic), 100)), "(2,3) failed");
  note(o, passed(generic_experiment(spec_of(5002, 3, 3, TensorClass::Generic), 25)), "(3,3) failed");
  note(o, passed(generic_experiment(spec_of(5003, 2, 4, TensorClass::Symmetric), 25)), "symmetric (2,4) failed");
  double dt = seconds_since(t0);
  note(o, dt < 300.0, "took " + std::to_string(dt) + " s");
  return o;
}

Outcome crosschecks() {
  Outcome o;
  note(o, passed(matrix_crosscheck_experiment(6001, 100)), "order-2 cross-check failed");
  note(o, passed(triangular_crosscheck_experiment(6002, 30)), "triangular cross-check failed");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"scaled identity characteristic polynomials", identity_charpolys},
      {"nilpotent fixture and its rotation", fixture_pair},
      {"two-dimensional worked example", worked_example},
      {"orthogonal orbit invariance", orbit},
      {"low-rank symmetric tensors", lowrank},
      {"quasi-triangular and symmetrization checks", quasi_triangular},
      {"coordinate eigenspaces", coordinate},
      {"generic tensors", generic},
      {"engine cross-checks", crosschecks},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double dt = seconds_since(t0);
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index << ": " << c.name;
    std::cout << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << dt << " s)";
    if (!o.detail.empty()) std::cout << " - " << o.detail;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
