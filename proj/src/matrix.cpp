#include "eigmult/matrix.hpp"

#include <cmath>
#include <utility>

namespace eigmult {

Integer bareiss_determinant(std::vector<Integer> a, std::size_t n) {
  if (n == 0) return 1;
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    const Integer& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = pivot * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, k) = 0;
    }
    prev = pivot;
  }
  Integer d = at(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

Rational determinant(const Matrix<Rational>& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Integer> ints(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& v = m(r, c);
      ints[r * n + c] = v.get_num() * (l / v.get_den());
    }
    scale *= l;
  }
  Rational d(bareiss_determinant(std::move(ints), n), scale);
  d.canonicalize();
  return d;
}

namespace {

template <class F>
F lu_determinant(const Matrix<F>& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  Matrix<F> a = m;
  const std::size_t n = a.rows();
  F det(1.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        p = i;
      }
    }
    if (best == 0.0) return F(0.0);
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      F f = a(i, k) / a(k, k);
      if (f == F(0.0)) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix<Rational>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(p, c));
    Rational inv = 1 / a(row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      Rational f = a(i, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

double determinant(const Matrix<double>& m) { return lu_determinant(m); }
Complex determinant(const Matrix<Complex>& m) { return lu_determinant(m); }

Matrix<Rational> inverse(const Matrix<Rational>& m) {
  if (!m.square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Rational> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw EngineError("matrix is singular");
  Matrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t rank(const Matrix<Rational>& m) {
  Matrix<Rational> a = m;
  return rref(a).size();
}

std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m) {
  Matrix<Rational> a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Complex> least_squares(const Matrix<Complex>& a, std::span<const Complex> b) {
  const std::size_t n = a.cols();
  Matrix<Complex> normal(n, n);
  std::vector<Complex> rhs(n, Complex(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < a.rows(); ++k) normal(i, j) += std::conj(a(k, i)) * a(k, j);
    for (std::size_t k = 0; k < a.rows(); ++k) rhs[i] += std::conj(a(k, i)) * b[k];
  }
  // Gaussian elimination with partial pivoting on the small normal system.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(normal(i, k)) > std::abs(normal(p, k))) p = i;
    if (std::abs(normal(p, k)) == 0.0) throw EngineError("singular least-squares system");
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(normal(k, c), normal(p, c));
      std::swap(rhs[k], rhs[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      Complex f = normal(i, k) / normal(k, k);
      for (std::size_t c = k; c < n; ++c) normal(i, c) -= f * normal(k, c);
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex s = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= normal(i, c) * x[c];
    x[i] = s / normal(i, i);
  }
  return x;
}

}  // namespace eigmult
