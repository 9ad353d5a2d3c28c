#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eigmult/matrix.hpp"
#include "eigmult/scalar.hpp"
#include "eigmult/tensor.hpp"

namespace eigmult {

/// Seeded generator whose output depends only on the seed: integers come
/// from rejection sampling on raw mt19937_64 words rather than from the
/// implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform_real();
  /// p / q with p uniform in [-pmax, pmax] and q uniform in [1, qmax].
  Rational rational(int pmax = 99, int qmax = 9);
  /// Like rational() but never zero.
  Rational nonzero_rational(int pmax = 99, int qmax = 9);

 private:
  std::mt19937_64 engine_;
};

/// Seed for stream `stream` of a run seeded with `base` (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

enum class TensorClass { Generic, Symmetric, RankS, UpperTriangular, QuasiTriangular, CoordinateEigenspace, ZeroEigenvalue };

struct RandomSpec {
  std::uint64_t seed = 1;
  int n = 2;
  int m = 3;
  TensorClass cls = TensorClass::Generic;
  /// s for RankS, k for QuasiTriangular and CoordinateEigenspace.
  int k = 1;
  /// Eigenvalue for CoordinateEigenspace.
  Rational lambda = 0;
  /// QuasiTriangular: make the leading k-block sub-tensor singular.
  bool singular_block = false;
  /// CoordinateEigenspace: conjugate by a random permutation.
  bool permute = true;
};

std::string to_string(TensorClass c);
TensorClass parse_tensor_class(const std::string& text);

struct GeneratedTensor {
  Tensor<Rational> tensor;
  /// RankS: the factor matrix A (n x s). ZeroEigenvalue: the planted
  /// eigenvector as an n x 1 matrix. Empty otherwise.
  Matrix<Rational> aux;
  /// CoordinateEigenspace with permute: the permutation applied (image of
  /// each coordinate, 0-based).
  std::vector<int> permutation;
};

/// Identical specs give identical tensors.
GeneratedTensor random_tensor(const RandomSpec& spec);

/// Random rational matrix with entries drawn by Rng::rational.
Matrix<Rational> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int pmax = 99, int qmax = 9);

/// Q = (I - S)(I + S)^(-1) for a seeded random rational skew-symmetric S.
/// Q^T Q = I and det Q = 1 exactly.
Matrix<Rational> cayley_orthogonal(std::uint64_t seed, int n);
Matrix<Rational> cayley_transform(const Matrix<Rational>& skew);

}  // namespace eigmult
