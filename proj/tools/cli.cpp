#include "eigmult/cli.hpp"

#include <chrono>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "eigmult/experiments.hpp"
#include "eigmult/report.hpp"
#include "eigmult/resultant.hpp"

namespace eigmult {

namespace {

struct RunConfig {
  std::string input;
  std::string mode = "auto";
  double cluster_tol = 1e-8;
  double tol = 1e-6;
  std::uint64_t seed = 1;
  int trials = 20;
  std::string format = "json";
  std::string lambda;
  double lambda_im = 0.0;
  std::string dump_macaulay;
  bool timing = false;

  // verify / random
  std::string prop;
  int n = 2;
  int m = 3;
  std::string cls = "generic";
  int k = 1;
  std::string scalar = "rational";
  bool singular = false;
  bool no_permute = false;
};

AnyTensor read_input(const std::string& input) {
  if (input.empty()) throw InputError("no tensor given");
  if (input.front() == '{') return parse_tensor(input);
  if (input == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_tensor(ss.str());
  }
  return load_tensor(input);
}

// Exact unless the tensor holds floats or numeric mode was requested.
bool exact_mode(const RunConfig& c, const AnyTensor& t) {
  const bool is_float = std::holds_alternative<Tensor<double>>(t);
  if (c.mode == "exact") {
    if (is_float) throw InputError("exact mode needs a rational tensor");
    return true;
  }
  if (c.mode == "numeric") return false;
  return !is_float;
}

Tensor<double> as_float(const AnyTensor& t) {
  if (const auto* q = std::get_if<Tensor<Rational>>(&t)) return tensor_cast<double>(*q);
  return std::get<Tensor<double>>(t);
}

std::optional<Rational> try_rational(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

Complex parse_complex_lambda(const RunConfig& c) {
  if (auto q = try_rational(c.lambda)) return {q->get_d(), c.lambda_im};
  std::size_t used = 0;
  double re = 0.0;
  try {
    re = std::stod(c.lambda, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != c.lambda.size()) throw InputError("malformed eigenvalue '" + c.lambda + "'");
  return {re, c.lambda_im};
}

Json cmd_det(const RunConfig& c) {
  auto t = read_input(c.input);
  Json j;
  if (exact_mode(c, t)) {
    const auto& q = std::get<Tensor<Rational>>(t);
    if (!c.dump_macaulay.empty()) {
      auto fs = slice_forms(q);
      std::vector<int> ordering(static_cast<std::size_t>(q.dim()));
      std::iota(ordering.begin(), ordering.end(), 0);
      auto mm = macaulay_matrix<Rational>(fs, ordering);
      std::ofstream f(c.dump_macaulay);
      if (!f) throw InputError("cannot write '" + c.dump_macaulay + "'");
      f << macaulay_csv(mm);
    }
    j["det"] = to_string(det_tensor(q));
  } else {
    if (!c.dump_macaulay.empty()) throw InputError("--dump-macaulay needs exact mode");
    j["det"] = number_json(det_tensor(as_float(t)));
  }
  return j;
}

Json cmd_charpoly(const RunConfig& c) {
  auto t = read_input(c.input);
  Json j;
  if (exact_mode(c, t)) {
    j["mode"] = "exact";
    j["charpoly"] = poly_json(char_poly(std::get<Tensor<Rational>>(t)));
  } else {
    auto r = char_poly_numeric(as_float(t));
    j["mode"] = "numeric";
    j["charpoly"] = poly_json(r.poly);
    j["residual"] = number_json(r.residual);
    j["flagged"] = r.flagged;
  }
  return j;
}

Json cmd_spectrum(const RunConfig& c) {
  auto t = read_input(c.input);
  if (exact_mode(c, t)) return spectrum_json(spectrum(std::get<Tensor<Rational>>(t), c.cluster_tol));
  return spectrum_json(spectrum(as_float(t), c.cluster_tol));
}

Json cmd_eigenvariety(const RunConfig& c) {
  auto t = read_input(c.input);
  if (c.lambda.empty()) throw InputError("eigenvariety needs --lambda");
  if (exact_mode(c, t)) {
    auto q = try_rational(c.lambda);
    if (!q || c.lambda_im != 0.0) throw InputError("exact mode needs a rational --lambda");
    return eigenvariety_json(eigenvectors_for(std::get<Tensor<Rational>>(t), *q, c.seed));
  }
  return eigenvariety_json(eigenvectors_numeric(as_float(t), parse_complex_lambda(c), c.tol, c.seed));
}

Json cmd_conjecture(const RunConfig& c) {
  auto t = read_input(c.input);
  std::vector<ConjectureVerdict> vs;
  if (exact_mode(c, t)) {
    const auto& q = std::get<Tensor<Rational>>(t);
    if (c.lambda.empty()) {
      vs = check_conjecture_all(q, c.seed);
    } else {
      auto l = try_rational(c.lambda);
      if (!l || c.lambda_im != 0.0) throw InputError("exact mode needs a rational --lambda");
      vs.push_back(check_conjecture(q, *l, c.seed));
    }
  } else {
    auto d = as_float(t);
    if (c.lambda.empty()) {
      vs = check_conjecture_all(d, c.cluster_tol, c.seed);
    } else {
      vs.push_back(check_conjecture(d, parse_complex_lambda(c), spectrum(d, c.cluster_tol), c.seed));
    }
  }
  Json j;
  Json arr = Json::array();
  bool strong = true, weak = true;
  for (const auto& v : vs) {
    strong = strong && v.strong_holds;
    weak = weak && v.weak_holds;
    arr.push_back(verdict_json(v));
  }
  j["verdicts"] = std::move(arr);
  j["strong_holds"] = strong;
  j["weak_holds"] = weak;
  return j;
}

Json cmd_verify(const RunConfig& c) {
  VerifyOptions o;
  o.trials = c.trials;
  o.seed = c.seed;
  o.n = c.n;
  o.m = c.m;
  return verify(c.prop, o);
}

Json cmd_random(const RunConfig& c) {
  RandomSpec spec;
  spec.seed = c.seed;
  spec.n = c.n;
  spec.m = c.m;
  spec.cls = parse_tensor_class(c.cls);
  spec.k = c.k;
  if (!c.lambda.empty()) spec.lambda = parse_rational(c.lambda);
  spec.singular_block = c.singular;
  spec.permute = !c.no_permute;
  if (c.n > 8 || c.m > 8) throw InputError("tensor shape exceeds supported size");
  auto g = random_tensor(spec);
  if (c.scalar == "float") return tensor_to_json(tensor_cast<double>(g.tensor));
  if (c.scalar != "rational") throw InputError("--scalar must be rational or float");
  return tensor_to_json(g.tensor);
}

void print_text(const Json& j, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << key << ": " << value.dump() << '\n';
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor determinants, spectra, eigenvarieties and multiplicity checks"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub, bool takes_tensor) {
    if (takes_tensor) sub->add_option("tensor", c.input, "Tensor JSON file, inline JSON, or - for stdin")->required();
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", c.timing, "Print elapsed time to stderr");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", c.mode, "exact, numeric or auto")->check(CLI::IsMember({"auto", "exact", "numeric"}));
  };

  auto* det = app.add_subcommand("det", "Tensor determinant");
  add_common(det, true);
  add_mode(det);
  det->add_option("--dump-macaulay", c.dump_macaulay, "Write the Macaulay matrix as CSV to this file");

  auto* chp = app.add_subcommand("charpoly", "Characteristic polynomial");
  add_common(chp, true);
  add_mode(chp);

  auto* spe = app.add_subcommand("spectrum", "Eigenvalues with algebraic multiplicities");
  add_common(spe, true);
  add_mode(spe);
  spe->add_option("--cluster-tol", c.cluster_tol, "Root clustering tolerance");

  auto* eig = app.add_subcommand("eigenvariety", "Eigenvariety of one eigenvalue");
  add_common(eig, true);
  add_mode(eig);
  eig->add_option("--lambda", c.lambda, "Eigenvalue (p/q, or a decimal in numeric mode)")->required();
  eig->add_option("--lambda-im", c.lambda_im, "Imaginary part (numeric mode)");
  eig->add_option("--tol", c.tol, "Residual tolerance for numeric eigenvectors");
  eig->add_option("--seed", c.seed, "Seed for random projections");

  auto* con = app.add_subcommand("conjecture", "Multiplicity bounds for one or all eigenvalues");
  add_common(con, true);
  add_mode(con);
  con->add_option("--lambda", c.lambda, "Eigenvalue; all eigenvalues if omitted");
  con->add_option("--lambda-im", c.lambda_im, "Imaginary part (numeric mode)");
  con->add_option("--cluster-tol", c.cluster_tol, "Root clustering tolerance");
  con->add_option("--seed", c.seed, "Seed for random projections");

  auto* ver = app.add_subcommand("verify", "Run a seeded verification suite");
  add_common(ver, false);
  ver->add_option("--prop", c.prop, "Suite to run")->required()->check(CLI::IsMember(verify_props()));
  ver->add_option("--trials", c.trials, "Number of seeded trials")->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", c.seed, "Base seed");
  ver->add_option("--n", c.n, "Dimension")->check(CLI::Range(1, 4));
  ver->add_option("--m", c.m, "Order")->check(CLI::Range(2, 6));

  auto* rnd = app.add_subcommand("random", "Seeded random tensor of a given class");
  add_common(rnd, false);
  rnd->add_option("--class", c.cls, "generic, symmetric, rank_s, upper_triangular, quasi_triangular, "
                                    "coordinate_eigenspace or zero_eigenvalue");
  rnd->add_option("--n", c.n, "Dimension");
  rnd->add_option("--m", c.m, "Order");
  rnd->add_option("--k", c.k, "Rank s or block size k");
  rnd->add_option("--lambda", c.lambda, "Planted eigenvalue (coordinate_eigenspace)");
  rnd->add_option("--seed", c.seed, "Seed");
  rnd->add_option("--scalar", c.scalar, "rational or float");
  rnd->add_flag("--singular", c.singular, "Make the leading block singular (quasi_triangular)");
  rnd->add_flag("--no-permute", c.no_permute, "Skip the random permutation (coordinate_eigenspace)");

  std::vector<std::string> argv_store{"eigmult"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Json j;
    bool ok = true;
    if (det->parsed()) {
      j = cmd_det(c);
    } else if (chp->parsed()) {
      j = cmd_charpoly(c);
    } else if (spe->parsed()) {
      j = cmd_spectrum(c);
    } else if (eig->parsed()) {
      j = cmd_eigenvariety(c);
    } else if (con->parsed()) {
      j = cmd_conjecture(c);
    } else if (ver->parsed()) {
      j = cmd_verify(c);
      ok = j["pass"].get<bool>();
      if (!ok) err << "verification failed\n";
    } else if (rnd->parsed()) {
      j = cmd_random(c);
    }
    if (c.format == "text") {
      print_text(j, out);
    } else {
      out << j.dump() << '\n';
    }
    if (c.timing) {
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      err << "elapsed " << secs << " s\n";
    }
    return ok ? kExitOk : kExitInvariant;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const EngineError& e) {
    err << "engine failure: " << e.what() << '\n';
    return kExitEngine;
  }
}

}  // namespace eigmult
