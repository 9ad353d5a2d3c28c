#pragma once

#include "eigmult/roots.hpp"
#include "eigmult/tensor.hpp"
#include "eigmult/unipoly.hpp"

namespace eigmult {

enum class Mode { Exact, Numeric };

/// N = n (m-1)^(n-1), the degree of the characteristic polynomial.
int charpoly_degree(int n, int m);

/// chi(lambda) = Det(lambda I - t), exact. Sample points lambda = 0, 1, ...
/// where the Macaulay minor is singular are skipped; N + 2 good points are
/// interpolated and the last one is a consistency check. Throws
/// InvariantViolation if the result is not monic of degree N.
QPoly char_poly(const Tensor<Rational>& t);

struct NumericCharPoly {
  UniPoly<double> poly;
  /// Largest relative residual at the held-out check points.
  double residual = 0.0;
  /// Residual above 1e-7: the coefficients should not be trusted.
  bool flagged = false;
};

/// chi from samples on a circle enclosing the spectrum, recovered by a
/// discrete Fourier transform, then checked at two held-out points.
NumericCharPoly char_poly_numeric(const Tensor<double>& t);

struct Spectrum {
  Mode mode = Mode::Exact;
  int degree = 0;
  QPoly charpoly;                   // exact mode
  UniPoly<double> charpoly_numeric;  // numeric mode
  RootList eigs;
  double residual = 0.0;
  bool flagged = false;

  /// Algebraic multiplicity of an exact rational value (0 if not an
  /// eigenvalue). Exact mode only.
  int am(const Rational& lambda) const;
  /// Sum of multiplicities of listed eigenvalues within `tol` of z.
  int am_near(Complex z, double tol) const;
};

/// Characteristic polynomial plus eigenvalues with multiplicities. Asserts
/// monicity, sum of multiplicities = N, the lambda^(N-1) coefficient equal to
/// -trace(t), and the constant term equal to Det(-t); throws
/// InvariantViolation otherwise.
Spectrum spectrum(const Tensor<Rational>& t, double cluster_tol = 1e-8);
Spectrum spectrum(const Tensor<double>& t, double cluster_tol = 1e-8);

/// prod_i (lambda - t_{i..i})^((m-1)^(n-1)); InputError unless t is upper
/// triangular.
QPoly upper_triangular_charpoly(const Tensor<Rational>& t);

}  // namespace eigmult
