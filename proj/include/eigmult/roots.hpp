#pragma once

#include <cstdint>
#include <vector>

#include "eigmult/unipoly.hpp"

namespace eigmult {

struct Root {
  Complex value;
  int multiplicity = 1;
  /// True when the root is a rational number verified by exact evaluation;
  /// `exact_value` then holds it.
  bool exact = false;
  Rational exact_value;
  /// Index into RootList::factors of the squarefree factor this root belongs
  /// to (exact path only, -1 otherwise).
  int factor_index = -1;
  /// Cluster diameter divided by the clustering tolerance; 0 for exact or
  /// unclustered roots. Large values mean the multiplicity is a guess.
  double spread = 0.0;
};

struct RootList {
  std::vector<Root> roots;
  /// Clustering tolerance in effect; 0 when every multiplicity is exact.
  double tolerance = 0.0;
  bool exact_multiplicities = false;
  /// Squarefree factors (exact path only), monic, with exponents.
  std::vector<std::pair<QPoly, int>> factors;

  int total_multiplicity() const;
};

/// Exact path: the zero root and rational roots are found exactly, the
/// squarefree structure fixes every multiplicity, and only the irrational
/// roots of each squarefree factor are located numerically.
RootList roots(const QPoly& p, double cluster_tol = 1e-8);

/// Numeric path: Aberth-Ehrlich followed by multiplicity clustering.
RootList roots(const UniPoly<double>& p, double cluster_tol = 1e-8);
RootList roots(const UniPoly<Complex>& p, double cluster_tol = 1e-8);

/// All deg p roots (with repetition) by Aberth-Ehrlich iteration with
/// Gauss-Seidel updates. Throws ConvergenceError after 500 iterations on
/// each of several deterministically perturbed restarts.
std::vector<Complex> aberth_roots(const UniPoly<Complex>& p, std::uint64_t seed = 0x5eed);

}  // namespace eigmult

namespace eigmult {

/// A root of an exact polynomial: exactly known in Q(i) when possible,
/// otherwise numeric together with an exact factor it annihilates.
struct AlgebraicRoot {
  bool exact = false;
  Gaussian value;
  Complex approx;
  QPoly factor;
};

/// Distinct roots of a nonzero exact polynomial. Rational roots and
/// Gaussian-rational roots are certified by exact evaluation.
std::vector<AlgebraicRoot> distinct_roots_exact(const QPoly& p);

}  // namespace eigmult
