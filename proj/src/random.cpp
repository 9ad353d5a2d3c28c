#include "eigmult/random.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "eigmult/errors.hpp"

namespace eigmult {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

double Rng::uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rational Rng::rational(int pmax, int qmax) {
  std::int64_t p = uniform_int(-pmax, pmax);
  std::int64_t q = uniform_int(1, qmax);
  Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

Rational Rng::nonzero_rational(int pmax, int qmax) {
  for (;;) {
    Rational r = rational(pmax, qmax);
    if (!is_zero(r)) return r;
  }
}

Matrix<Rational> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int pmax, int qmax) {
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(pmax, qmax);
  return m;
}

Matrix<Rational> cayley_transform(const Matrix<Rational>& skew) {
  if (!skew.square()) throw DimensionError("Cayley transform needs a square matrix");
  for (std::size_t i = 0; i < skew.rows(); ++i)
    for (std::size_t j = 0; j < skew.cols(); ++j)
      if (skew(i, j) != -skew(j, i)) throw InputError("Cayley transform needs a skew-symmetric matrix");
  auto id = Matrix<Rational>::identity(skew.rows());
  return (id - skew) * inverse(id + skew);
}

Matrix<Rational> cayley_orthogonal(std::uint64_t seed, int n) {
  if (n < 2) throw DimensionError("Cayley orthogonal matrices need n >= 2");
  Rng rng(seed);
  // I + S is invertible for real skew S (its eigenvalues are 1 + i r), so
  // no reseeding is ever needed; inverse() would throw otherwise.
  Matrix<Rational> s(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational v = rng.rational(9, 4);
      s(i, j) = v;
      s(j, i) = -v;
    }
  return cayley_transform(s);
}

}  // namespace eigmult

namespace eigmult {

namespace {

// Index of the representative entry (i, sorted trailing indices of alpha).
std::size_t representative(const Tensor<Rational>& t, int i, const std::vector<int>& alpha) {
  std::vector<int> idx{i};
  for (int j = 0; j < static_cast<int>(alpha.size()); ++j)
    for (int c = 0; c < alpha[j]; ++c) idx.push_back(j);
  return t.linear_index(idx);
}

// Makes the X(alpha)-sum of slice i equal target(i, alpha) for every alpha
// accepted by `select`.
template <class Select, class Target>
void impose_sums(Tensor<Rational>& t, Select select, Target target) {
  const std::size_t s = t.slice_size();
  for (int i = 0; i < t.dim(); ++i) {
    std::map<std::vector<int>, Rational> sums;
    for (std::size_t j = 0; j < s; ++j) {
      auto alpha = trailing_exponent(j, t.order(), t.dim());
      if (!select(i, alpha)) continue;
      sums[alpha] += t[i * s + j];
    }
    for (const auto& [alpha, sum] : sums) t[representative(t, i, alpha)] += target(i, alpha) - sum;
  }
}

bool supported_below(const std::vector<int>& alpha, int k) {
  for (std::size_t j = static_cast<std::size_t>(k); j < alpha.size(); ++j)
    if (alpha[j] != 0) return false;
  return true;
}

// Adjusts t_{i j..j} (j = pivot[i]) so that t x^(m-1) = 0.
void plant_kernel_vector(Tensor<Rational>& t, const std::vector<Rational>& x, int limit) {
  std::vector<Rational> xs(x.begin(), x.begin() + limit);
  Tensor<Rational> u = t;
  std::vector<int> idx(static_cast<std::size_t>(t.order()));
  for (int i = 0; i < limit; ++i) {
    std::vector<int> block(static_cast<std::size_t>(limit));
    std::iota(block.begin(), block.end(), 0);
    auto sub = subtensor(t, block);
    auto y = contract<Rational>(sub, std::span<const Rational>(xs));
    Rational p = 1;
    for (int c = 1; c < t.order(); ++c) p *= xs[i];
    idx[0] = i;
    std::fill(idx.begin() + 1, idx.end(), i);
    t.at(idx) -= y[i] / p;
  }
}

Tensor<Rational> generic(Rng& rng, int n, int m) {
  Tensor<Rational> t(m, n);
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = rng.rational();
  return t;
}

}  // namespace

std::string to_string(TensorClass c) {
  switch (c) {
    case TensorClass::Generic: return "generic";
    case TensorClass::Symmetric: return "symmetric";
    case TensorClass::RankS: return "rank_s";
    case TensorClass::UpperTriangular: return "upper_triangular";
    case TensorClass::QuasiTriangular: return "quasi_triangular";
    case TensorClass::CoordinateEigenspace: return "coordinate_eigenspace";
    case TensorClass::ZeroEigenvalue: return "zero_eigenvalue";
  }
  return "generic";
}

TensorClass parse_tensor_class(const std::string& text) {
  for (auto c : {TensorClass::Generic, TensorClass::Symmetric, TensorClass::RankS, TensorClass::UpperTriangular,
                 TensorClass::QuasiTriangular, TensorClass::CoordinateEigenspace, TensorClass::ZeroEigenvalue})
    if (to_string(c) == text) return c;
  throw InputError("unknown tensor class '" + text + "'");
}

GeneratedTensor random_tensor(const RandomSpec& spec) {
  if (spec.n < 1 || spec.m < 2) throw DimensionError("random tensors need n >= 1 and m >= 2");
  Rng rng(spec.seed);
  const int n = spec.n, m = spec.m;
  GeneratedTensor out;
  switch (spec.cls) {
    case TensorClass::Generic:
      out.tensor = generic(rng, n, m);
      break;
    case TensorClass::Symmetric: {
      Tensor<Rational> t(m, n);
      for (std::size_t lin = 0; lin < t.size(); ++lin) {
        auto idx = t.multi_index(lin);
        if (!std::is_sorted(idx.begin(), idx.end())) continue;
        t[lin] = rng.rational();
      }
      for (std::size_t lin = 0; lin < t.size(); ++lin) {
        auto idx = t.multi_index(lin);
        std::sort(idx.begin(), idx.end());
        t[lin] = Rational(t.at(idx));
      }
      t.set_kind(TensorKind::Symmetric);
      out.tensor = std::move(t);
      break;
    }
    case TensorClass::RankS: {
      if (spec.k < 1 || spec.k > n) throw InputError("rank s must satisfy 1 <= s <= n");
      std::vector<std::vector<Rational>> vs(static_cast<std::size_t>(spec.k));
      for (auto& v : vs) {
        v.resize(static_cast<std::size_t>(n));
        for (auto& x : v) x = rng.rational();
      }
      auto r = rank_one_symmetric(vs, n, m);
      out.tensor = std::move(r.tensor);
      out.aux = std::move(r.factors);
      break;
    }
    case TensorClass::UpperTriangular: {
      Tensor<Rational> t(m, n);
      for (std::size_t lin = 0; lin < t.size(); ++lin) {
        auto idx = t.multi_index(lin);
        if (*std::min_element(idx.begin() + 1, idx.end()) >= idx[0]) t[lin] = rng.rational();
      }
      out.tensor = std::move(t);
      break;
    }
    case TensorClass::QuasiTriangular: {
      const int k = spec.k;
      if (k < 1 || k > n) throw InputError("block size k must satisfy 1 <= k <= n");
      Tensor<Rational> t = generic(rng, n, m);
      impose_sums(
          t, [k](int i, const std::vector<int>& a) { return i >= k && supported_below(a, k); },
          [](int, const std::vector<int>&) { return Rational(0); });
      if (spec.singular_block) {
        std::vector<Rational> y(static_cast<std::size_t>(k));
        for (auto& v : y) v = rng.nonzero_rational(9, 4);
        plant_kernel_vector(t, y, k);
      }
      out.tensor = std::move(t);
      break;
    }
    case TensorClass::CoordinateEigenspace: {
      const int k = spec.k;
      if (k < 1 || k > n) throw InputError("eigenspace dimension k must satisfy 1 <= k <= n");
      Tensor<Rational> t = generic(rng, n, m);
      const Rational lambda = spec.lambda;
      impose_sums(
          t, [k](int, const std::vector<int>& a) { return supported_below(a, k); },
          [&](int i, const std::vector<int>& a) {
            return (i < k && a[i] == m - 1) ? lambda : Rational(0);
          });
      if (spec.permute) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
        Matrix<Rational> p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p(perm[i], i) = 1;
        t = action(p, t);
        out.permutation = perm;
      }
      out.tensor = std::move(t);
      break;
    }
    case TensorClass::ZeroEigenvalue: {
      Tensor<Rational> t = generic(rng, n, m);
      std::vector<Rational> x(static_cast<std::size_t>(n));
      for (auto& v : x) v = rng.nonzero_rational(9, 4);
      plant_kernel_vector(t, x, n);
      out.tensor = std::move(t);
      out.aux = Matrix<Rational>(static_cast<std::size_t>(n), 1, x);
      break;
    }
  }
  return out;
}

}  // namespace eigmult
