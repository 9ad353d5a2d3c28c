#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigmult/form.hpp"
#include "eigmult/matrix.hpp"
#include "eigmult/roots.hpp"
#include "eigmult/tensor.hpp"

namespace eigmult {

/// A point of projective space. Exact points live in Q(i) and are scaled so
/// their last nonzero coordinate is 1; numeric points have unit max-norm
/// with the first coordinate of maximal modulus real and positive.
struct ProjectivePoint {
  bool exact = false;
  std::vector<Gaussian> coords;
  std::vector<Complex> approx;
  /// For numeric points: an exact polynomial whose root produced the point.
  std::optional<QPoly> defining_factor;
};

ProjectivePoint exact_point(std::vector<Gaussian> coords);
ProjectivePoint numeric_point(std::vector<Complex> coords);
/// Equality as projective points (exact when both are exact).
bool same_point(const ProjectivePoint& a, const ProjectivePoint& b, double tol = 1e-7);

struct Component {
  /// Affine dimension: 1 for a line through a projective point, 2 for the
  /// cone over a plane curve, n for the whole space.
  int dimension = 0;
  std::optional<ProjectivePoint> point;
  /// Defining form of a hypersurface component (n = 3, dimension 2).
  std::optional<QForm> factor;
  bool whole_space = false;
  /// False when the factor could not be split into irreducible pieces.
  bool factored = true;
  double residual = 0.0;
};

struct EigenvarietyReport {
  std::string lambda;
  Complex lambda_value;
  std::vector<Component> components;
  int gm = 0;
  int kappa = 0;
  bool in_spectrum = false;
  bool exact = true;
  /// False when some component is an unfactored higher-degree factor, so
  /// kappa is only a lower bound.
  bool complete = true;
  /// n = 2: number of common projective roots with multiplicity, i.e. the
  /// degree of the gcd of the two forms (-1 otherwise).
  int common_root_count = -1;
  /// Numeric mode: the largest eigen-equation residual among reported points.
  double max_residual = 0.0;
};

/// Forms of t x^(m-1) - lambda x^[m-1].
std::vector<QForm> eigen_system(const Tensor<Rational>& t, const Rational& lambda);

/// Exact eigenvariety for n <= 3 and rational lambda. `seed` drives the
/// random coordinate change used to eliminate variables for n = 3.
EigenvarietyReport eigenvectors_for(const Tensor<Rational>& t, const Rational& lambda, std::uint64_t seed = 1);

/// Numeric eigenvariety for n in {2, 3} and complex lambda; a candidate
/// point is accepted when every equation's relative residual is <= tol.
/// Positive-dimensional pieces beyond the whole space are not detected
/// numerically; the report is then flagged incomplete.
EigenvarietyReport eigenvectors_numeric(const Tensor<double>& t, Complex lambda, double tol = 1e-6,
                                        std::uint64_t seed = 1);

int gm(const Tensor<Rational>& t, const Rational& lambda);

/// Distinct projective zeros of a nonzero binary form.
std::vector<ProjectivePoint> binary_form_points(const QForm& g);

struct KernelCheck {
  bool holds = false;
  std::size_t kernel_dim = 0;
  bool full_column_rank = false;
  std::vector<std::vector<Rational>> kernel;
};

/// For t = sum a_i^(x)m with A = [a_1 ... a_R]: every vector of ker(A^T)
/// is annihilated by t, and when A has full column rank, sampled vectors
/// outside the kernel are not.
KernelCheck kernel_check(const Tensor<Rational>& t, const Matrix<Rational>& a, std::uint64_t seed = 1);

/// Relative residual max_i |(t x^(m-1) - lambda x^[m-1])_i| / scale.
double eigen_residual(const Tensor<double>& t, Complex lambda, std::span<const Complex> x);

}  // namespace eigmult
