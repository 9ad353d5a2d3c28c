#include "eigmult/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eigmult/report.hpp"
#include "eigmult/resultant.hpp"

namespace eigmult {

namespace {

long long ipow_ll(long long b, int e) {
  long long r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

Tensor<Rational> scaled_identity(int n, int m, const Rational& mu) { return mu * identity_tensor<Rational>(n, m); }

bool is_eigenvector(const Tensor<Rational>& t, const Rational& lambda, const std::vector<Rational>& x) {
  auto y = contract<Rational>(t, std::span<const Rational>(x));
  auto p = entrywise_power<Rational>(std::span<const Rational>(x), t.order() - 1);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] != lambda * p[i]) return false;
  return true;
}

std::vector<Gaussian> to_gaussian(const std::vector<Rational>& v) { return {v.begin(), v.end()}; }

// Number of distinct eigenvector directions of an n = 2 tensor: the distinct
// projective zeros of x2^d f1 - x1^d f2, counted exactly.
int binary_eigendirections(const Tensor<Rational>& t) {
  const int d = t.order() - 1;
  auto fs = slice_forms(t);
  QForm e = QForm::power(2, 1, d, 1) * fs[0] - QForm::power(2, 0, d, 1) * fs[1];
  if (e.is_zero()) return -1;
  std::vector<Rational> c(static_cast<std::size_t>(2 * d) + 1);
  for (int k = 0; k <= 2 * d; ++k) c[k] = e.coeff(Exponent{k, 2 * d - k});
  QPoly p(c);
  int count = is_zero(c[2 * d]) ? 1 : 0;
  if (p.degree() >= 1) count += exact_div(p, gcd(p, p.derivative())).degree();
  return count;
}

bool contains_kernel(const EigenvarietyReport& ev, const std::vector<std::vector<Rational>>& kernel, int n) {
  if (kernel.empty()) return ev.gm == 0;
  if (ev.kappa != 1 || ev.gm != static_cast<int>(kernel.size())) return false;
  const Component& c = ev.components.front();
  if (c.whole_space) return static_cast<int>(kernel.size()) == n;
  if (c.point) {
    if (!c.point->exact) return false;
    return same_point(*c.point, exact_point(to_gaussian(kernel.front())));
  }
  if (c.factor) {
    for (const auto& v : kernel)
      if (!is_zero(c.factor->evaluate<Rational>(std::span<const Rational>(v)))) return false;
    return true;
  }
  return false;
}

std::vector<Gaussian> apply_gaussian(const Matrix<Rational>& q, const std::vector<Gaussian>& x) {
  std::vector<Gaussian> y(q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) y[i] += Gaussian(q(i, j)) * x[j];
  return y;
}

// Every point component of `base` mapped by q appears among the points of
// `image`.
bool points_transported(const EigenvarietyReport& base, const EigenvarietyReport& image, const Matrix<Rational>& q) {
  for (const auto& c : base.components) {
    if (!c.point) continue;
    ProjectivePoint mapped;
    if (c.point->exact) {
      mapped = exact_point(apply_gaussian(q, c.point->coords));
    } else {
      auto qd = matrix_cast<Complex>(q);
      mapped = numeric_point(apply<Complex, Complex>(qd, std::span<const Complex>(c.point->approx)));
    }
    bool found = std::any_of(image.components.begin(), image.components.end(), [&](const Component& o) {
      return o.point && same_point(*o.point, mapped, 1e-6);
    });
    if (!found) return false;
  }
  return true;
}

Json pass_report(const std::string& name) {
  Json j;
  j["experiment"] = name;
  j["pass"] = true;
  return j;
}

}  // namespace

long long conjecture_term(int d, int m) { return d <= 0 ? 0 : d * ipow_ll(m - 1, d - 1); }

ConjectureVerdict make_verdict(const EigenvarietyReport& ev, int am, int m) {
  ConjectureVerdict v;
  v.lambda = ev.lambda;
  v.lambda_value = ev.lambda_value;
  v.exact = ev.exact;
  v.am = am;
  v.gm = ev.gm;
  v.complete = ev.complete;
  for (const auto& c : ev.components) {
    v.dims.push_back(c.dimension);
    v.strong_bound += conjecture_term(c.dimension, m);
  }
  v.weak_bound = conjecture_term(v.gm, m);
  v.strong_holds = am >= v.strong_bound;
  v.weak_holds = am >= v.weak_bound;
  return v;
}

ConjectureVerdict check_conjecture(const Tensor<Rational>& t, const Rational& lambda, std::uint64_t seed) {
  auto sp = spectrum(t);
  return make_verdict(eigenvectors_for(t, lambda, seed), sp.am(lambda), t.order());
}

ConjectureVerdict check_conjecture(const Tensor<double>& t, Complex lambda, const Spectrum& s, std::uint64_t seed) {
  const Root* best = nullptr;
  for (const auto& r : s.eigs.roots)
    if (!best || std::abs(r.value - lambda) < std::abs(best->value - lambda)) best = &r;
  if (!best || std::abs(best->value - lambda) > 1e-6 * std::max(1.0, std::abs(lambda))) {
    auto ev = eigenvectors_numeric(t, lambda, 1e-6, seed);
    return make_verdict(ev, 0, t.order());
  }
  return make_verdict(eigenvectors_numeric(t, best->value, 1e-6, seed), best->multiplicity, t.order());
}

std::vector<ConjectureVerdict> check_conjecture_all(const Tensor<Rational>& t, std::uint64_t seed) {
  auto sp = spectrum(t);
  std::vector<ConjectureVerdict> out;
  std::optional<Tensor<double>> td;
  for (const auto& r : sp.eigs.roots) {
    if (r.exact) {
      out.push_back(make_verdict(eigenvectors_for(t, r.exact_value, seed), r.multiplicity, t.order()));
    } else {
      if (!td) td = tensor_cast<double>(t);
      out.push_back(make_verdict(eigenvectors_numeric(*td, r.value, 1e-6, seed), r.multiplicity, t.order()));
    }
  }
  return out;
}

std::vector<ConjectureVerdict> check_conjecture_all(const Tensor<double>& t, double cluster_tol, std::uint64_t seed) {
  auto sp = spectrum(t, cluster_tol);
  std::vector<ConjectureVerdict> out;
  for (const auto& r : sp.eigs.roots)
    out.push_back(make_verdict(eigenvectors_numeric(t, r.value, 1e-6, seed), r.multiplicity, t.order()));
  return out;
}

Json verdict_json(const ConjectureVerdict& v) {
  Json j;
  j["lambda"] = v.lambda;
  j["exact"] = v.exact;
  j["am"] = v.am;
  j["gm"] = v.gm;
  j["dims"] = v.dims;
  j["strong_bound"] = v.strong_bound;
  j["weak_bound"] = v.weak_bound;
  j["strong_holds"] = v.strong_holds;
  j["weak_holds"] = v.weak_holds;
  j["equality"] = v.am == v.strong_bound;
  j["complete"] = v.complete;
  return j;
}

Tensor<Rational> minimize_counterexample(const Tensor<Rational>& t,
                                         const std::function<bool(const Tensor<Rational>&)>& violates) {
  Tensor<Rational> cur = t;
  cur.set_kind(TensorKind::General);
  for (std::size_t lin = 0; lin < cur.size(); ++lin) {
    if (is_zero(cur[lin])) continue;
    Tensor<Rational> trial = cur;
    trial[lin] = 0;
    bool still = false;
    try {
      still = violates(trial);
    } catch (const std::exception&) {
      still = false;
    }
    if (still) cur = std::move(trial);
  }
  return cur;
}

Tensor<Rational> fixture_a() {
  Tensor<Rational> a(3, 2);
  a.at({0, 0, 1}) = 1;
  return a;
}

Tensor<double> fixture_b() {
  const double r = 1.0 / std::numbers::sqrt2;
  Matrix<double> p(2, 2, {r, -r, -r, -r});
  return action(p, tensor_cast<double>(fixture_a()));
}

QPoly matrix_charpoly(const Matrix<Rational>& a) {
  if (!a.square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix<Rational> mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    Matrix<Rational> am = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return QPoly(c);
}

Json identity_experiment(int n, int m, const std::vector<Rational>& mus) {
  Json j = pass_report("identity");
  j["n"] = n;
  j["m"] = m;
  const int big_n = charpoly_degree(n, m);
  Json cases = Json::array();
  for (const auto& mu : mus) {
    auto t = scaled_identity(n, m, mu);
    QPoly chi = char_poly(t);
    QPoly expect = pow(QPoly::linear_root(mu), big_n);
    auto sp = spectrum(t);
    bool ok = chi == expect && sp.am(mu) == big_n;
    Json c;
    c["mu"] = to_string(mu);
    c["charpoly"] = poly_json(chi);
    c["am"] = sp.am(mu);
    c["pass"] = ok;
    if (!ok) j["pass"] = false;
    cases.push_back(std::move(c));
  }
  j["cases"] = std::move(cases);
  return j;
}

Json noninvariance_experiment(int trials, std::uint64_t seed) {
  Json j = pass_report("noninvariance");
  auto a = fixture_a();
  QPoly chi_a = char_poly(a);
  bool a_ok = chi_a == QPoly::monomial(Rational(1), 4);
  j["charpoly_a"] = poly_json(chi_a);

  auto b = fixture_b();
  auto nb = char_poly_numeric(b);
  const double expect[5] = {0.0, 0.0, 0.5, std::numbers::sqrt2, 1.0};
  double err = 0.0;
  for (int k = 0; k <= 4; ++k) err = std::max(err, std::abs(nb.poly.coeff(k) - expect[k]));
  auto sb = spectrum(b);
  const int am0 = sb.am_near(0.0, 1e-6);
  const int am_r = sb.am_near(-1.0 / std::numbers::sqrt2, 1e-6);
  auto verdict = check_conjecture(b, 0.0, sb);
  j["charpoly_b"] = poly_json(nb.poly);
  j["charpoly_b_error"] = number_json(err);
  j["am_b"] = {{"0", am0}, {"-1/sqrt2", am_r}};
  j["verdict_b_0"] = verdict_json(verdict);
  bool b_ok = err <= 1e-9 && am0 == 2 && am_r == 2 && verdict.strong_holds;

  int am_min = 4;
  Json ams = Json::array();
  for (int i = 0; i < trials; ++i) {
    auto q = cayley_orthogonal(derive_seed(seed, static_cast<std::uint64_t>(i)), 2);
    int am = spectrum(action(q, a)).am(0);
    am_min = std::min(am_min, am);
    ams.push_back(am);
  }
  j["orbit_am0"] = std::move(ams);
  j["orbit_am0_min"] = am_min;
  j["pass"] = a_ok && b_ok && am_min < 4;
  return j;
}

Json orbit_experiment(const Tensor<Rational>& t, int trials, std::uint64_t seed) {
  if (!is_zero(det_tensor(t))) throw InputError("orbit experiment needs 0 to be an eigenvalue");
  Json j = pass_report("orbit");
  j["tensor"] = tensor_to_json(t);
  auto base = eigenvectors_for(t, 0, seed);
  const int am0 = spectrum(t).am(0);
  j["baseline"] = {{"am", am0}, {"gm", base.gm}, {"kappa", base.kappa}};
  int am_min = am0, am_max = am0;
  bool gm_inv = true, kappa_inv = true, transported = true;
  Json rows = Json::array();
  for (int i = 0; i < trials; ++i) {
    auto q = cayley_orthogonal(derive_seed(seed, static_cast<std::uint64_t>(i)), t.dim());
    auto tq = action(q, t);
    auto ev = eigenvectors_for(tq, 0, seed);
    const int am = spectrum(tq).am(0);
    am_min = std::min(am_min, am);
    am_max = std::max(am_max, am);
    gm_inv = gm_inv && ev.gm == base.gm;
    kappa_inv = kappa_inv && ev.kappa == base.kappa;
    transported = transported && points_transported(base, ev, q);
    rows.push_back({{"am", am}, {"gm", ev.gm}, {"kappa", ev.kappa}});
  }
  j["orbit"] = std::move(rows);
  j["am0_min"] = am_min;
  j["am0_max"] = am_max;
  j["gm_invariant"] = gm_inv;
  j["kappa_invariant"] = kappa_inv;
  j["points_transported"] = transported;
  j["pass"] = gm_inv && kappa_inv && transported;
  return j;
}

Json orbit_suite(int trials, std::uint64_t seed, int extra) {
  Json j = pass_report("orbit_suite");
  Json runs = Json::array();
  auto a_report = orbit_experiment(fixture_a(), trials, seed);
  bool ok = a_report["pass"].get<bool>();
  const bool a_drops = a_report["am0_min"].get<int>() < 4;
  runs.push_back(std::move(a_report));
  for (int e = 0; e < extra; ++e) {
    RandomSpec spec;
    spec.seed = derive_seed(seed, 1000 + static_cast<std::uint64_t>(e));
    spec.n = e % 2 == 0 ? 2 : 3;
    spec.m = 3;
    spec.cls = TensorClass::ZeroEigenvalue;
    auto r = orbit_experiment(random_tensor(spec).tensor, trials, seed);
    ok = ok && r["pass"].get<bool>();
    runs.push_back(std::move(r));
  }
  j["runs"] = std::move(runs);
  j["a_am0_drops"] = a_drops;
  j["pass"] = ok && a_drops;
  return j;
}

Json lowrank_experiment(const RandomSpec& spec_in, int trials) {
  RandomSpec spec = spec_in;
  spec.cls = TensorClass::RankS;
  const int n = spec.n, m = spec.m, s = spec.k;
  if (s < 1 || s > n || n > 3) throw InputError("low-rank experiment needs 1 <= s <= n <= 3");
  Json j = pass_report("lowrank");
  j["n"] = n;
  j["m"] = m;
  j["s"] = s;
  const long long nnz_bound = s * ipow_ll(m - 1, n - 1);
  const long long am_bound = (n - s) * ipow_ll(m - 1, n - 1);
  j["nnz_bound"] = nnz_bound;
  j["am0_bound"] = am_bound;
  int equal = 0, nnz_ok = 0, am_ok = 0, kernel_ok = 0, v0_ok = 0, strong_ok = 0;
  Json failures = Json::array();
  for (int i = 0; i < trials; ++i) {
    spec.seed = derive_seed(spec_in.seed, static_cast<std::uint64_t>(i));
    auto g = random_tensor(spec);
    auto sp = spectrum(g.tensor);
    const int am0 = sp.am(0);
    const int nnz = sp.degree - am0;
    auto kc = kernel_check(g.tensor, g.aux, spec.seed);
    auto ev = eigenvectors_for(g.tensor, 0, spec.seed);
    const bool v0 = contains_kernel(ev, kc.kernel, n);
    auto verdict = make_verdict(ev, am0, m);
    nnz_ok += nnz <= nnz_bound;
    am_ok += am0 >= am_bound;
    equal += am0 == am_bound;
    kernel_ok += kc.holds;
    v0_ok += v0;
    strong_ok += verdict.strong_holds;
    if (nnz > nnz_bound || am0 < am_bound || !kc.holds || !v0 || !verdict.strong_holds)
      failures.push_back({{"trial", i}, {"am0", am0}, {"nnz", nnz}, {"kernel_check", kc.holds}, {"v0_is_kernel", v0}});
  }
  const double rate = trials > 0 ? static_cast<double>(equal) / trials : 1.0;
  j["trials"] = trials;
  j["nnz_within_bound"] = nnz_ok;
  j["am0_within_bound"] = am_ok;
  j["am0_equality"] = equal;
  j["equality_rate"] = rate;
  j["kernel_check"] = kernel_ok;
  j["v0_is_kernel"] = v0_ok;
  j["strong_bound_holds"] = strong_ok;
  j["failures"] = std::move(failures);
  j["pass"] = nnz_ok == trials && am_ok == trials && kernel_ok == trials && v0_ok == trials &&
              strong_ok == trials && rate >= 0.95;
  return j;
}

Json quasi_triangular_experiment(std::uint64_t seed, int n, int m, int trials) {
  Json j = pass_report("quasi_triangular");
  j["n"] = n;
  j["m"] = m;
  int ok = 0;
  Json failures = Json::array();
  for (int i = 0; i < trials; ++i) {
    RandomSpec spec;
    spec.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    spec.n = n;
    spec.m = m;
    spec.cls = TensorClass::QuasiTriangular;
    spec.k = 1 + i % n;
    spec.singular_block = true;
    auto t = random_tensor(spec).tensor;
    std::vector<int> block(static_cast<std::size_t>(spec.k));
    std::iota(block.begin(), block.end(), 0);
    const bool structure = is_quasi_triangular(t, spec.k);
    const bool block_singular = is_zero(det_tensor(subtensor(t, block)));
    const bool det_zero = is_zero(det_tensor(t));
    if (structure && block_singular && det_zero) {
      ++ok;
    } else {
      failures.push_back({{"trial", i}, {"k", spec.k}, {"quasi_triangular", structure},
                          {"block_singular", block_singular}, {"det_zero", det_zero}});
    }
  }
  j["trials"] = trials;
  j["det_zero"] = ok;
  j["failures"] = std::move(failures);
  j["pass"] = ok == trials;
  return j;
}

Json symmetrization_experiment(std::uint64_t seed, int n, int m, int trials) {
  Json j = pass_report("symmetrization");
  j["n"] = n;
  j["m"] = m;
  int ok = 0;
  Json failures = Json::array();
  for (int i = 0; i < trials; ++i) {
    RandomSpec spec;
    spec.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    spec.n = n;
    spec.m = m;
    auto t = random_tensor(spec).tensor;
    auto e = esym(t);
    const bool chi_eq = char_poly(t) == char_poly(e);
    const bool det_eq = det_symmetrization_check(t);
    const bool sym = is_slice_symmetric(e);
    if (chi_eq && det_eq && sym) {
      ++ok;
    } else {
      failures.push_back({{"trial", i}, {"charpoly_equal", chi_eq}, {"det_equal", det_eq}, {"slice_symmetric", sym}});
    }
  }
  j["trials"] = trials;
  j["equal"] = ok;
  j["failures"] = std::move(failures);
  j["pass"] = ok == trials;
  return j;
}

Json coordinate_case_experiment(int k, const Rational& lambda, std::uint64_t seed, int n, int m, int trials) {
  if (k < 1 || k > n || n > 3) throw InputError("coordinate case needs 1 <= k <= n <= 3");
  Json j = pass_report("coordinate_case");
  j["n"] = n;
  j["m"] = m;
  j["k"] = k;
  j["lambda"] = to_string(lambda);
  const long long bound = conjecture_term(k, m);
  j["am_bound"] = bound;
  int ok = 0;
  Json rows = Json::array();
  for (int i = 0; i < trials; ++i) {
    RandomSpec spec;
    spec.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    spec.n = n;
    spec.m = m;
    spec.cls = TensorClass::CoordinateEigenspace;
    spec.k = k;
    spec.lambda = lambda;
    auto g = random_tensor(spec);
    Rng rng(spec.seed);
    std::vector<int> coords(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) coords[c] = g.permutation.empty() ? c : g.permutation[c];
    bool subspace = true;
    for (int c = 0; c < k; ++c) {
      std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
      x[coords[c]] = 1;
      subspace = subspace && is_eigenvector(g.tensor, lambda, x);
    }
    for (int r = 0; r < 3; ++r) {
      std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
      for (int c = 0; c < k; ++c) x[coords[c]] = rng.rational(9, 4);
      subspace = subspace && is_eigenvector(g.tensor, lambda, x);
    }
    const int am = spectrum(g.tensor).am(lambda);
    auto ev = eigenvectors_for(g.tensor, lambda, spec.seed);
    auto verdict = make_verdict(ev, am, m);
    const bool pass = subspace && am >= bound && ev.gm >= k && verdict.strong_holds;
    ok += pass;
    rows.push_back({{"trial", i}, {"am", am}, {"gm", ev.gm}, {"subspace", subspace}, {"verdict", verdict_json(verdict)}});
  }
  j["trials"] = trials;
  j["passed"] = ok;
  j["instances"] = std::move(rows);
  j["pass"] = ok == trials;
  return j;
}

Json generic_experiment(const RandomSpec& spec_in, int trials) {
  if (spec_in.cls != TensorClass::Generic && spec_in.cls != TensorClass::Symmetric)
    throw InputError("generic experiment takes generic or symmetric tensors");
  const int n = spec_in.n, m = spec_in.m;
  if (n > 3) throw InputError("generic experiment supports n <= 3");
  Json j = pass_report("generic");
  j["class"] = to_string(spec_in.cls);
  j["n"] = n;
  j["m"] = m;
  const int big_n = charpoly_degree(n, m);
  j["expected_eigenvalues"] = big_n;
  int ok = 0;
  double worst = 0.0;
  Json reseeded = Json::array();
  Json failures = Json::array();
  for (int i = 0; i < trials; ++i) {
    RandomSpec spec = spec_in;
    spec.seed = derive_seed(spec_in.seed, static_cast<std::uint64_t>(i));
    bool pass = false;
    for (int attempt = 0; attempt < 4 && !pass; ++attempt) {
      if (attempt > 0) {
        reseeded.push_back({{"trial", i}, {"seed", spec.seed}, {"reason", "repeated eigenvalue"}});
        spec.seed = derive_seed(spec.seed, 77);
      }
      auto t = random_tensor(spec).tensor;
      auto sp = spectrum(t);
      const bool sqf = is_squarefree(sp.charpoly);
      const int distinct = static_cast<int>(sp.eigs.roots.size());
      if (!sqf || distinct != big_n) continue;
      bool unique = true;
      if (n == 2) {
        unique = binary_eigendirections(t) == big_n;
      } else if (n == 3) {
        auto td = tensor_cast<double>(t);
        for (const auto& r : sp.eigs.roots) {
          auto ev = eigenvectors_numeric(td, r.value, 1e-6, spec.seed);
          worst = std::max(worst, ev.max_residual);
          unique = unique && ev.kappa == 1 && ev.gm == 1 && ev.max_residual <= 1e-8;
        }
      }
      if (!unique) {
        failures.push_back({{"trial", i}, {"seed", spec.seed}, {"reason", "eigenvector not unique"}});
        break;
      }
      pass = true;
    }
    if (pass) {
      ++ok;
    } else if (failures.empty() || failures.back()["trial"] != i) {
      failures.push_back({{"trial", i}, {"reason", "no generic instance after reseeding"}});
    }
  }
  j["trials"] = trials;
  j["passed"] = ok;
  if (n == 3) j["max_residual"] = number_json(worst);
  j["reseeded"] = std::move(reseeded);
  j["failures"] = std::move(failures);
  j["pass"] = ok == trials;
  return j;
}

Json conjecture_experiment(std::uint64_t seed, int n, int m, int trials) {
  if (n < 1 || n > 3) throw InputError("conjecture experiment supports 1 <= n <= 3");
  static const TensorClass classes[] = {TensorClass::Generic,         TensorClass::Symmetric,
                                        TensorClass::UpperTriangular, TensorClass::QuasiTriangular,
                                        TensorClass::CoordinateEigenspace, TensorClass::RankS,
                                        TensorClass::ZeroEigenvalue};
  constexpr int n_classes = 7;
  Json j = pass_report("conjecture");
  j["n"] = n;
  j["m"] = m;
  int verdicts = 0, strong = 0, weak = 0, equality = 0, incomplete = 0;
  Json violations = Json::array();
  for (int i = 0; i < trials; ++i) {
    RandomSpec spec;
    spec.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    spec.n = n;
    spec.m = m;
    spec.cls = classes[i % n_classes];
    spec.k = 1 + (i / n_classes) % n;
    spec.singular_block = true;
    spec.lambda = Rng(spec.seed ^ 0x1a3bULL).rational(3, 2);
    auto t = random_tensor(spec).tensor;
    auto vs = check_conjecture_all(t, spec.seed);
    for (const auto& v : vs) {
      ++verdicts;
      strong += v.strong_holds;
      weak += v.weak_holds;
      equality += v.am == v.strong_bound;
      incomplete += !v.complete;
      if (!v.strong_holds) {
        auto violates = [&](const Tensor<Rational>& x) {
          auto ws = check_conjecture_all(x, spec.seed);
          return std::any_of(ws.begin(), ws.end(), [](const ConjectureVerdict& w) { return !w.strong_holds; });
        };
        violations.push_back({{"trial", i},
                              {"class", to_string(spec.cls)},
                              {"verdict", verdict_json(v)},
                              {"tensor", tensor_to_json(t)},
                              {"minimized", tensor_to_json(minimize_counterexample(t, violates))}});
      }
    }
  }
  j["trials"] = trials;
  j["verdicts"] = verdicts;
  j["strong_holds"] = strong;
  j["weak_holds"] = weak;
  j["equality"] = equality;
  j["incomplete"] = incomplete;
  j["violations"] = std::move(violations);
  j["pass"] = strong == verdicts;
  return j;
}

Json matrix_crosscheck_experiment(std::uint64_t seed, int trials, int max_n) {
  Json j = pass_report("matrix_crosscheck");
  int ok = 0;
  Json failures = Json::array();
  for (int i = 0; i < trials; ++i) {
    const int n = 1 + i % max_n;
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    auto a = random_matrix(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    Tensor<Rational> t(2, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) t.at({r, c}) = a(r, c);
    const bool det_ok = det_tensor(t) == determinant(a);
    const bool chi_ok = char_poly(t) == matrix_charpoly(a);
    if (det_ok && chi_ok) {
      ++ok;
    } else {
      failures.push_back({{"trial", i}, {"n", n}, {"det", det_ok}, {"charpoly", chi_ok}});
    }
  }
  j["trials"] = trials;
  j["agree"] = ok;
  j["failures"] = std::move(failures);
  j["pass"] = ok == trials;
  return j;
}

Json triangular_crosscheck_experiment(std::uint64_t seed, int trials) {
  static const int shapes[][2] = {{2, 3}, {2, 4}, {3, 3}};
  Json j = pass_report("triangular_crosscheck");
  int ok = 0;
  Json failures = Json::array();
  for (int i = 0; i < trials; ++i) {
    RandomSpec spec;
    spec.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    spec.n = shapes[i % 3][0];
    spec.m = shapes[i % 3][1];
    spec.cls = TensorClass::UpperTriangular;
    auto t = random_tensor(spec).tensor;
    if (char_poly(t) == upper_triangular_charpoly(t)) {
      ++ok;
    } else {
      failures.push_back({{"trial", i}, {"n", spec.n}, {"m", spec.m}});
    }
  }
  j["trials"] = trials;
  j["agree"] = ok;
  j["failures"] = std::move(failures);
  j["pass"] = ok == trials;
  return j;
}

std::vector<std::string> verify_props() {
  return {"2.8", "3.1", "3.2", "4.1", "4.2", "4.3", "5.2", "5.3", "5.6", "6.4", "7.2", "conjecture", "engine"};
}

Json verify(const std::string& prop, const VerifyOptions& o) {
  if (o.trials < 0) throw InputError("trials must be non-negative");
  if (o.n < 1 || o.m < 2) throw InputError("verify needs n >= 1 and m >= 2");
  Json runs = Json::array();
  auto all_pass = [&] {
    return std::all_of(runs.begin(), runs.end(), [](const Json& r) { return r["pass"].get<bool>(); });
  };
  if (prop == "2.8") {
    runs.push_back(identity_experiment(o.n, o.m, {Rational(0), Rational(1), Rational(-2, 3)}));
  } else if (prop == "3.1") {
    runs.push_back(noninvariance_experiment(o.trials, o.seed));
  } else if (prop == "3.2") {
    runs.push_back(orbit_suite(o.trials, o.seed));
  } else if (prop == "4.1" || prop == "4.2" || prop == "4.3") {
    const int top = prop == "4.1" ? o.n - 1 : o.n;
    for (int s = 1; s <= top; ++s) {
      RandomSpec spec;
      spec.seed = derive_seed(o.seed, static_cast<std::uint64_t>(s));
      spec.n = o.n;
      spec.m = o.m;
      spec.k = s;
      runs.push_back(lowrank_experiment(spec, o.trials));
    }
  } else if (prop == "5.2") {
    runs.push_back(quasi_triangular_experiment(o.seed, o.n, o.m, o.trials));
  } else if (prop == "5.3") {
    runs.push_back(symmetrization_experiment(o.seed, o.n, o.m, o.trials));
  } else if (prop == "5.6") {
    for (int k = 1; k <= o.n; ++k)
      runs.push_back(coordinate_case_experiment(k, Rational(1), derive_seed(o.seed, static_cast<std::uint64_t>(k)),
                                                o.n, o.m, o.trials));
  } else if (prop == "6.4" || prop == "7.2") {
    RandomSpec spec;
    spec.seed = o.seed;
    spec.n = o.n;
    spec.m = o.m;
    spec.cls = prop == "6.4" ? TensorClass::Generic : TensorClass::Symmetric;
    runs.push_back(generic_experiment(spec, o.trials));
  } else if (prop == "conjecture") {
    runs.push_back(conjecture_experiment(o.seed, o.n, o.m, o.trials));
  } else if (prop == "engine") {
    runs.push_back(matrix_crosscheck_experiment(o.seed, o.trials));
    runs.push_back(triangular_crosscheck_experiment(o.seed, o.trials));
  } else {
    throw InputError("unknown suite '" + prop + "'");
  }
  Json j;
  j["prop"] = prop;
  j["seed"] = o.seed;
  j["trials"] = o.trials;
  j["n"] = o.n;
  j["m"] = o.m;
  j["pass"] = all_pass();
  j["runs"] = std::move(runs);
  return j;
}

}  // namespace eigmult
