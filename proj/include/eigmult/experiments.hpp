#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "eigmult/eigenvariety.hpp"
#include "eigmult/random.hpp"
#include "eigmult/spectra.hpp"
#include "eigmult/tensor_io.hpp"

namespace eigmult {

/// d (m-1)^(d-1), and 0 for d = 0.
long long conjecture_term(int d, int m);

struct ConjectureVerdict {
  std::string lambda;
  Complex lambda_value;
  /// True when lambda is rational and the eigenvariety was computed exactly.
  bool exact = false;
  int am = 0;
  int gm = 0;
  std::vector<int> dims;
  long long strong_bound = 0;
  long long weak_bound = 0;
  bool strong_holds = true;
  bool weak_holds = true;
  /// False when some component could not be factored, so the strong bound
  /// may be an underestimate.
  bool complete = true;
};

ConjectureVerdict make_verdict(const EigenvarietyReport& ev, int am, int m);

/// Verdict for one rational lambda (am = 0 and no components if lambda is
/// not an eigenvalue).
ConjectureVerdict check_conjecture(const Tensor<Rational>& t, const Rational& lambda, std::uint64_t seed = 1);
/// Verdict at the listed eigenvalue of `s` nearest to lambda.
ConjectureVerdict check_conjecture(const Tensor<double>& t, Complex lambda, const Spectrum& s,
                                   std::uint64_t seed = 1);

/// One verdict per distinct eigenvalue. Rational eigenvalues get exact
/// eigenvarieties; irrational ones are handled numerically with their
/// exact multiplicities.
std::vector<ConjectureVerdict> check_conjecture_all(const Tensor<Rational>& t, std::uint64_t seed = 1);
std::vector<ConjectureVerdict> check_conjecture_all(const Tensor<double>& t, double cluster_tol = 1e-8,
                                                    std::uint64_t seed = 1);

Json verdict_json(const ConjectureVerdict& v);

/// Zeroes entries one at a time, keeping each change while `violates`
/// still holds.
Tensor<Rational> minimize_counterexample(const Tensor<Rational>& t,
                                         const std::function<bool(const Tensor<Rational>&)>& violates);

/// The order-3 tensor with a_112 = 1 and every other entry zero.
Tensor<Rational> fixture_a();
/// P . A for the orthogonal P with entries +-1/sqrt(2), in floating point.
Tensor<double> fixture_b();

/// Classical characteristic polynomial det(lambda I - A) by Faddeev-LeVerrier.
QPoly matrix_charpoly(const Matrix<Rational>& a);

// Every experiment returns a JSON report whose "pass" field is the overall
// verdict. Trial i uses derive_seed(seed, i).

/// chi of mu I against (lambda - mu)^N, for each listed mu.
Json identity_experiment(int n, int m, const std::vector<Rational>& mus);

/// Exact chi(A) = lambda^4, numeric chi(B), B's spectrum, and an orbit
/// point of A with am(0) < 4.
Json noninvariance_experiment(int trials, std::uint64_t seed);

/// am(0), gm(0) and the component count of Q . t over seeded Cayley Q.
/// Throws InputError unless 0 is an eigenvalue of t.
Json orbit_experiment(const Tensor<Rational>& t, int trials, std::uint64_t seed);

/// orbit_experiment on A and on `extra` random tensors with a planted zero
/// eigenvalue (alternating n = 2 and n = 3, m = 3).
Json orbit_suite(int trials, std::uint64_t seed, int extra = 5);

/// Rank-s symmetric tensors: nnz and am(0) bounds, generic equality rate,
/// kernel check and V(0) = ker(A^T).
Json lowrank_experiment(const RandomSpec& spec, int trials);

/// Quasi-triangular tensors with a singular leading block have Det = 0.
Json quasi_triangular_experiment(std::uint64_t seed, int n, int m, int trials);

/// char_poly(t) = char_poly(esym(t)) and Det(t) = Det(esym(t)).
Json symmetrization_experiment(std::uint64_t seed, int n, int m, int trials);

/// Coordinate eigenspace tensors: the planted subspace lies in V(lambda)
/// and am(lambda) >= k (m-1)^(k-1).
Json coordinate_case_experiment(int k, const Rational& lambda, std::uint64_t seed, int n, int m, int trials = 1);

/// Generic (or symmetric) tensors: chi squarefree with N distinct roots and
/// one eigenvector per eigenvalue (exact for n = 2, numeric for n = 3).
Json generic_experiment(const RandomSpec& spec, int trials);

/// The strong bound on tensors drawn from every generator class.
Json conjecture_experiment(std::uint64_t seed, int n, int m, int trials);

/// m = 2 tensors against the classical determinant and characteristic
/// polynomial (n = 1..max_n), and upper triangular tensors against the
/// closed form.
Json matrix_crosscheck_experiment(std::uint64_t seed, int trials, int max_n = 4);
Json triangular_crosscheck_experiment(std::uint64_t seed, int trials);

struct VerifyOptions {
  int trials = 20;
  std::uint64_t seed = 1;
  int n = 2;
  int m = 3;
};

/// Runs the suite for `prop` ("2.8", "3.1", "3.2", "4.1", "4.2", "4.3",
/// "5.2", "5.3", "5.6", "6.4", "7.2", "conjecture" or "engine").
Json verify(const std::string& prop, const VerifyOptions& opts);
std::vector<std::string> verify_props();

}  // namespace eigmult
