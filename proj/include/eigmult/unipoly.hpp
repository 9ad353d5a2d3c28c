#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eigmult/errors.hpp"
#include "eigmult/scalar.hpp"

namespace eigmult {

/// Dense univariate polynomial, coefficients low to high. The zero
/// polynomial has no coefficients and degree -1.
template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const T& c) { return UniPoly(std::vector<T>{c}); }
  static UniPoly monomial(const T& c, int k) {
    std::vector<T> v(static_cast<std::size_t>(k) + 1, T(0));
    v.back() = c;
    return UniPoly(std::move(v));
  }
  /// x - a
  static UniPoly linear_root(const T& a) { return UniPoly(std::vector<T>{T(-a), T(1)}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  T coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw InputError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  template <class V = T>
  V evaluate(const V& x) const {
    V acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + scalar_cast<V>(*it);
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = T(static_cast<long>(k)) * c_[k];
    return UniPoly(std::move(d));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<T> s(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) s[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) s[i] += b.c_[i];
    return UniPoly(std::move(s));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<T> s(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) s[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) s[i] -= b.c_[i];
    return UniPoly(std::move(s));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<T> s = a.c_;
    for (auto& v : s) v = -v;
    return UniPoly(std::move(s));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> p(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (eigmult::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(p));
  }
  friend UniPoly operator*(const T& s, const UniPoly& a) {
    std::vector<T> p = a.c_;
    for (auto& v : p) v = s * v;
    return UniPoly(std::move(p));
  }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && eigmult::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class To, class From>
UniPoly<To> poly_cast(const UniPoly<From>& p) {
  std::vector<To> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(scalar_cast<To>(v));
  return UniPoly<To>(std::move(c));
}

template <class T>
UniPoly<T> pow(const UniPoly<T>& p, int k) {
  UniPoly<T> r = UniPoly<T>::constant(T(1));
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

using QPoly = UniPoly<Rational>;

/// Quotient and remainder; throws InputError on division by zero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// a / b, throwing EngineError when the remainder is nonzero.
QPoly exact_div(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& p);
/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);
bool is_squarefree(const QPoly& p);

struct SquarefreeFactorization {
  Rational leading;
  /// Monic, squarefree, pairwise coprime factors with their exponents.
  std::vector<std::pair<QPoly, int>> factors;
};

/// Yun's algorithm; p = leading * prod f^e. Throws InputError on p = 0.
SquarefreeFactorization squarefree_factor(const QPoly& p);

/// Newton interpolation through (xs[k], ys[k]) of degree <= degree_bound.
/// Points beyond the first degree_bound+1 must be reproduced exactly, else
/// EngineError. Throws InputError on duplicate abscissae or too few points.
QPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys, int degree_bound);

/// "c0 + c1λ + c2λ^2 ..." with zero terms dropped; "0" for the zero polynomial.
std::string to_string(const QPoly& p);
std::string to_string(const UniPoly<double>& p);

}  // namespace eigmult
