#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eigmult/form.hpp"
#include "eigmult/matrix.hpp"
#include "eigmult/tensor.hpp"

namespace eigmult {

/// Macaulay matrix of n forms of common degree d in degree D = n(d-1)+1.
/// Rows and columns are both labeled by the degree-D monomials in the same
/// (descending lex) order; row beta holds x^(beta - d e_i) f_i where i is the
/// first variable in `ordering` with x_i^d | x^beta.
template <class T>
struct MacaulayMatrix {
  int nvars = 0;
  int degree = 0;         // d
  int target_degree = 0;  // D
  std::vector<Exponent> monomials;
  std::vector<int> row_form;
  std::vector<Exponent> row_multiplier;
  Matrix<T> matrix;
  /// Indices of the non-reduced monomials (divisible by x_i^d for at least
  /// two i); rows and columns with these labels form M'.
  std::vector<std::size_t> minor_indices;

  Matrix<T> minor() const { return matrix.select(minor_indices, minor_indices); }
};

template <class T>
MacaulayMatrix<T> macaulay_matrix(std::span<const HomogeneousForm<T>> fs, std::span<const int> ordering);

/// det(M) / det(M') for one variable ordering, or nullopt when det(M')
/// vanishes (numerically negligible for floating scalars).
template <class T>
std::optional<T> macaulay_ratio(std::span<const HomogeneousForm<T>> fs, std::span<const int> ordering);

/// Resultant of n forms of common degree via Macaulay's ratio. When the
/// identity ordering gives 0/0 every variable ordering is tried, then the
/// value is recovered along the line f_i + s x_i^d by interpolation in s.
/// Throws IndeterminateRatio if that fails too.
template <class T>
T macaulay_resultant(std::span<const HomogeneousForm<T>> fs);

/// Determinant of the 2d x 2d Sylvester matrix of the dehomogenized binary
/// forms; Res(x1^d, x2^d) = 1.
template <class T>
T sylvester_resultant(const HomogeneousForm<T>& f, const HomogeneousForm<T>& g);

/// Dispatch: n = 1 gives the single coefficient, n = 2 Sylvester, n >= 3
/// Macaulay. All forms must share nvars = n and one degree.
template <class T>
T resultant(std::span<const HomogeneousForm<T>> fs);

/// Res of the slice forms; Det(t) = 0 iff t has eigenvalue 0. Dimensions
/// 1..4 are supported.
template <class T>
T det_tensor(const Tensor<T>& t);

/// det_tensor(t) == det_tensor(esym(t)).
bool det_symmetrization_check(const Tensor<Rational>& t);

/// CSV dump of a Macaulay matrix with row and column monomial labels.
std::string macaulay_csv(const MacaulayMatrix<Rational>& m);

/// Number of monomials of degree D in n variables.
std::size_t monomial_count(int nvars, int degree);

}  // namespace eigmult
