#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "eigmult/errors.hpp"
#include "eigmult/matrix.hpp"
#include "eigmult/scalar.hpp"

namespace eigmult {

enum class TensorKind { General, Symmetric, SliceSymmetric };

std::string to_string(TensorKind kind);

inline std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Dense order-m, dimension-n tensor. Indices are 0-based internally and
/// laid out row-major (first index slowest), so slice i is the contiguous
/// block [i * n^(m-1), (i+1) * n^(m-1)).
template <class T>
class Tensor {
 public:
  using value_type = T;

  Tensor() = default;
  Tensor(int order, int dim, TensorKind kind = TensorKind::General) : order_(order), dim_(dim), kind_(kind) {
    if (order < 2) throw DimensionError("tensor order must be at least 2");
    if (dim < 1) throw DimensionError("tensor dimension must be at least 1");
    entries_.assign(ipow(static_cast<std::size_t>(dim), order), T(0));
  }

  int order() const noexcept { return order_; }
  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t slice_size() const noexcept { return ipow(static_cast<std::size_t>(dim_), order_ - 1); }
  TensorKind kind() const noexcept { return kind_; }
  const std::vector<T>& entries() const noexcept { return entries_; }

  T& operator[](std::size_t linear) { return entries_[linear]; }
  const T& operator[](std::size_t linear) const { return entries_[linear]; }

  T& at(std::span<const int> idx) { return entries_[linear_index(idx)]; }
  const T& at(std::span<const int> idx) const { return entries_[linear_index(idx)]; }
  T& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx.begin(), idx.size())); }
  const T& at(std::initializer_list<int> idx) const { return at(std::span<const int>(idx.begin(), idx.size())); }

  std::size_t linear_index(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != order_) throw DimensionError("index length does not match tensor order");
    std::size_t lin = 0;
    for (int v : idx) {
      if (v < 0 || v >= dim_) throw DimensionError("tensor index out of range");
      lin = lin * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
    }
    return lin;
  }

  std::vector<int> multi_index(std::size_t linear) const {
    std::vector<int> idx(order_);
    for (int k = order_ - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(linear % static_cast<std::size_t>(dim_));
      linear /= static_cast<std::size_t>(dim_);
    }
    return idx;
  }

  /// Re-tags the tensor; throws InputError if the entries do not have the
  /// claimed symmetry.
  void set_kind(TensorKind kind);

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.order_ == b.order_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  friend Tensor operator+(const Tensor& a, const Tensor& b) {
    check_same_shape(a, b);
    Tensor c(a.order_, a.dim_);
    for (std::size_t i = 0; i < a.size(); ++i) c.entries_[i] = a.entries_[i] + b.entries_[i];
    return c;
  }
  friend Tensor operator-(const Tensor& a, const Tensor& b) {
    check_same_shape(a, b);
    Tensor c(a.order_, a.dim_);
    for (std::size_t i = 0; i < a.size(); ++i) c.entries_[i] = a.entries_[i] - b.entries_[i];
    return c;
  }
  friend Tensor operator*(const T& s, const Tensor& a) {
    Tensor c(a.order_, a.dim_, a.kind_);
    for (std::size_t i = 0; i < a.size(); ++i) c.entries_[i] = s * a.entries_[i];
    return c;
  }
  friend Tensor operator-(const Tensor& a) { return T(-1) * a; }

 private:
  static void check_same_shape(const Tensor& a, const Tensor& b) {
    if (a.order_ != b.order_ || a.dim_ != b.dim_) throw DimensionError("tensor shape mismatch");
  }

  int order_ = 0;
  int dim_ = 0;
  TensorKind kind_ = TensorKind::General;
  std::vector<T> entries_;
};

template <class To, class From>
Tensor<To> tensor_cast(const Tensor<From>& t) {
  Tensor<To> out(t.order(), t.dim(), t.kind());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = scalar_cast<To>(t[i]);
  return out;
}

/// Exponent vector alpha with x_{i2}...x_{im} = x^alpha for the trailing
/// part of a linear index inside a slice.
std::vector<int> trailing_exponent(std::size_t slice_offset, int order, int dim);

/// Number of trailing index tuples that map to the exponent alpha, i.e. the
/// multinomial coefficient (m-1)! / prod(alpha_j!).
std::size_t orbit_size(std::span<const int> alpha);

/// The vector t x^(m-1): entry i is sum t_{i i2..im} x_{i2} ... x_{im}.
template <class V, class T>
std::vector<V> contract(const Tensor<T>& t, std::span<const V> x) {
  if (static_cast<int>(x.size()) != t.dim()) throw DimensionError("contract: vector length must equal tensor dimension");
  const std::size_t n = static_cast<std::size_t>(t.dim());
  std::vector<V> prods{V(1)};
  for (int k = 1; k < t.order(); ++k) {
    std::vector<V> next;
    next.reserve(prods.size() * n);
    for (const V& p : prods)
      for (std::size_t j = 0; j < n; ++j) next.push_back(p * x[j]);
    prods = std::move(next);
  }
  std::vector<V> y(n, V(0));
  const std::size_t s = prods.size();
  for (std::size_t i = 0; i < n; ++i) {
    V acc(0);
    for (std::size_t j = 0; j < s; ++j) {
      const T& e = t[i * s + j];
      if (is_zero(e)) continue;
      acc += scalar_cast<V>(e) * prods[j];
    }
    y[i] = acc;
  }
  return y;
}

template <class V, class T>
std::vector<V> contract(const Tensor<T>& t, const std::vector<V>& x) {
  return contract<V, T>(t, std::span<const V>(x));
}

/// x^[m-1]: entrywise power.
template <class V>
std::vector<V> entrywise_power(std::span<const V> x, int power) {
  std::vector<V> y;
  y.reserve(x.size());
  for (const V& v : x) {
    V p(1);
    for (int k = 0; k < power; ++k) p = p * v;
    y.push_back(p);
  }
  return y;
}

/// (P1, ..., Pm) . t with every Pk of shape r x n.
template <class T>
Tensor<T> multi_action(std::span<const Matrix<T>> ps, const Tensor<T>& t) {
  const int m = t.order();
  const std::size_t n = static_cast<std::size_t>(t.dim());
  if (static_cast<int>(ps.size()) != m) throw DimensionError("multi_action needs one matrix per mode");
  const std::size_t r = ps[0].rows();
  for (const auto& p : ps)
    if (p.rows() != r || p.cols() != n) throw DimensionError("multi_action matrices must all be r x n");
  // Successive mode products; dims[k] switches from n to r once mode k is done.
  std::vector<std::size_t> dims(m, n);
  std::vector<T> data = t.entries();
  for (int mode = 0; mode < m; ++mode) {
    std::size_t outer = 1, inner = 1;
    for (int k = 0; k < mode; ++k) outer *= dims[k];
    for (int k = mode + 1; k < m; ++k) inner *= dims[k];
    std::vector<T> next(outer * r * inner, T(0));
    const Matrix<T>& p = ps[mode];
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t in = 0; in < inner; ++in) {
          const T& a = data[(o * n + j) * inner + in];
          if (is_zero(a)) continue;
          for (std::size_t i = 0; i < r; ++i) {
            const T& pij = p(i, j);
            if (is_zero(pij)) continue;
            next[(o * r + i) * inner + in] += pij * a;
          }
        }
    data = std::move(next);
    dims[mode] = r;
  }
  Tensor<T> out(m, static_cast<int>(r));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = data[i];
  return out;
}

/// P . t, the same matrix acting on every mode.
template <class T>
Tensor<T> action(const Matrix<T>& p, const Tensor<T>& t) {
  std::vector<Matrix<T>> ps(static_cast<std::size_t>(t.order()), p);
  return multi_action<T>(ps, t);
}

/// Checks (P.t) x^(m-1) == P [ t (P^T x)^(m-1) ]; exact for rationals,
/// relative tolerance `tol` otherwise.
template <class T>
bool action_identity_check(const Matrix<T>& p, const Tensor<T>& t, std::span<const T> x, double tol = 1e-12) {
  if (!p.square() || static_cast<int>(p.rows()) != t.dim() || static_cast<int>(x.size()) != t.dim())
    throw DimensionError("action_identity_check shape mismatch");
  auto lhs = contract<T>(action(p, t), x);
  auto ptx = apply<T, T>(p.transposed(), x);
  auto inner = contract<T>(t, std::span<const T>(ptx));
  auto rhs = apply<T, T>(p, std::span<const T>(inner));
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if constexpr (is_exact_v<T>) {
      if (lhs[i] != rhs[i]) return false;
    } else {
      if (magnitude(lhs[i] - rhs[i]) > tol * (1.0 + magnitude(rhs[i]))) return false;
    }
  }
  return true;
}

template <class T>
Tensor<T> identity_tensor(int n, int m) {
  Tensor<T> t(m, n, TensorKind::Symmetric);
  std::vector<int> idx(m);
  for (int i = 0; i < n; ++i) {
    std::fill(idx.begin(), idx.end(), i);
    t.at(idx) = T(1);
  }
  return t;
}

/// t - lambda * I.
template <class T>
Tensor<T> shift_by_identity(const Tensor<T>& t, const T& lambda) {
  Tensor<T> out = t;
  std::vector<int> idx(t.order());
  for (int i = 0; i < t.dim(); ++i) {
    std::fill(idx.begin(), idx.end(), i);
    out.at(idx) -= lambda;
  }
  return out;
}

/// Slice symmetrization: every slice is averaged over the permutations of
/// its trailing m-1 indices. Preserves t x^(m-1) for every x.
template <class T>
Tensor<T> esym(const Tensor<T>& t) {
  const std::size_t s = t.slice_size();
  Tensor<T> out(t.order(), t.dim(),
                t.kind() == TensorKind::Symmetric ? TensorKind::Symmetric : TensorKind::SliceSymmetric);
  std::vector<std::vector<int>> alphas(s);
  for (std::size_t j = 0; j < s; ++j) alphas[j] = trailing_exponent(j, t.order(), t.dim());
  for (int i = 0; i < t.dim(); ++i) {
    std::map<std::vector<int>, T> sums;
    for (std::size_t j = 0; j < s; ++j) sums[alphas[j]] += t[i * s + j];
    for (std::size_t j = 0; j < s; ++j) {
      const auto& a = alphas[j];
      out[i * s + j] = sums[a] / T(static_cast<long>(orbit_size(a)));
    }
  }
  return out;
}

/// Sub-tensor on the (0-based, strictly increasing) index set `idx`.
template <class T>
Tensor<T> subtensor(const Tensor<T>& t, std::span<const int> idx) {
  if (idx.empty()) throw DimensionError("subtensor index set must be nonempty");
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 0 || idx[k] >= t.dim()) throw DimensionError("subtensor index out of range");
    if (k > 0 && idx[k] <= idx[k - 1]) throw DimensionError("subtensor indices must be strictly increasing");
  }
  const int k = static_cast<int>(idx.size());
  Tensor<T> u(t.order(), k);
  std::vector<int> src(t.order());
  for (std::size_t lin = 0; lin < u.size(); ++lin) {
    auto mi = u.multi_index(lin);
    for (int p = 0; p < t.order(); ++p) src[p] = idx[mi[p]];
    u[lin] = t.at(src);
  }
  return u;
}

/// For every slice i >= k (0-based) the X(alpha)-sums with alpha supported
/// on the first k coordinates vanish.
template <class T>
bool is_quasi_triangular(const Tensor<T>& t, int k) {
  if (k < 1 || k > t.dim()) throw DimensionError("quasi-triangular block size out of range");
  const std::size_t s = t.slice_size();
  for (int i = k; i < t.dim(); ++i) {
    std::map<std::vector<int>, T> sums;
    for (std::size_t j = 0; j < s; ++j) {
      auto mi = t.multi_index(i * s + j);
      bool inside = std::all_of(mi.begin() + 1, mi.end(), [k](int v) { return v < k; });
      if (!inside) continue;
      sums[trailing_exponent(j, t.order(), t.dim())] += t[i * s + j];
    }
    for (const auto& [alpha, v] : sums)
      if (!is_zero(v)) return false;
  }
  return true;
}

/// t_{i i2..im} = 0 unless i <= min(i2, ..., im).
template <class T>
bool is_upper_triangular(const Tensor<T>& t) {
  for (std::size_t lin = 0; lin < t.size(); ++lin) {
    if (is_zero(t[lin])) continue;
    auto mi = t.multi_index(lin);
    if (*std::min_element(mi.begin() + 1, mi.end()) < mi[0]) return false;
  }
  return true;
}

template <class T>
bool is_symmetric(const Tensor<T>& t) {
  for (std::size_t lin = 0; lin < t.size(); ++lin) {
    auto mi = t.multi_index(lin);
    std::sort(mi.begin(), mi.end());
    if (!(t.at(mi) == t[lin])) return false;
  }
  return true;
}

template <class T>
bool is_slice_symmetric(const Tensor<T>& t) {
  for (std::size_t lin = 0; lin < t.size(); ++lin) {
    auto mi = t.multi_index(lin);
    std::sort(mi.begin() + 1, mi.end());
    if (!(t.at(mi) == t[lin])) return false;
  }
  return true;
}

template <class T>
void Tensor<T>::set_kind(TensorKind kind) {
  if (kind == TensorKind::Symmetric && !is_symmetric(*this))
    throw InputError("tensor tagged symmetric is not invariant under index permutations");
  if (kind == TensorKind::SliceSymmetric && !is_slice_symmetric(*this))
    throw InputError("tensor tagged slice-symmetric is not invariant under trailing index permutations");
  kind_ = kind;
}

/// (m-1)^(n-1) * sum_i t_{i...i}; minus the lambda^(N-1) coefficient of
/// the characteristic polynomial.
template <class T>
T trace(const Tensor<T>& t) {
  T diag(0);
  std::vector<int> idx(t.order());
  for (int i = 0; i < t.dim(); ++i) {
    std::fill(idx.begin(), idx.end(), i);
    diag += t.at(idx);
  }
  return T(static_cast<long>(ipow(static_cast<std::size_t>(t.order() - 1), t.dim() - 1))) * diag;
}

template <class T>
struct RankOneSum {
  Tensor<T> tensor;
  Matrix<T> factors;  // n x R, columns are the a_i
};

/// sum_i a_i^{(x) m}, tagged symmetric.
template <class T>
RankOneSum<T> rank_one_symmetric(const std::vector<std::vector<T>>& vectors, int n, int m) {
  Matrix<T> a(static_cast<std::size_t>(n), vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    if (static_cast<int>(vectors[c].size()) != n) throw DimensionError("rank-one factor has wrong length");
    for (int r = 0; r < n; ++r) a(r, c) = vectors[c][r];
  }
  Tensor<T> t(m, n);
  for (std::size_t lin = 0; lin < t.size(); ++lin) {
    auto mi = t.multi_index(lin);
    T acc(0);
    for (const auto& v : vectors) {
      T p(1);
      for (int k : mi) p *= v[k];
      acc += p;
    }
    t[lin] = acc;
  }
  t.set_kind(TensorKind::Symmetric);
  return {std::move(t), std::move(a)};
}

}  // namespace eigmult
