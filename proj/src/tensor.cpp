#include "eigmult/tensor.hpp"

namespace eigmult {

std::string to_string(TensorKind kind) {
  switch (kind) {
    case TensorKind::General: return "general";
    case TensorKind::Symmetric: return "symmetric";
    case TensorKind::SliceSymmetric: return "slice-symmetric";
  }
  return "general";
}

std::vector<int> trailing_exponent(std::size_t slice_offset, int order, int dim) {
  std::vector<int> alpha(static_cast<std::size_t>(dim), 0);
  for (int k = 1; k < order; ++k) {
    ++alpha[slice_offset % static_cast<std::size_t>(dim)];
    slice_offset /= static_cast<std::size_t>(dim);
  }
  return alpha;
}

std::size_t orbit_size(std::span<const int> alpha) {
  // (sum alpha)! / prod alpha_j!, built up as a product of binomials.
  std::size_t total = 0, result = 1;
  for (int a : alpha) {
    for (int j = 1; j <= a; ++j) {
      ++total;
      result = result * total / static_cast<std::size_t>(j);
    }
  }
  return result;
}

}  // namespace eigmult
