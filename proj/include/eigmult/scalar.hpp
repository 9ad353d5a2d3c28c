#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace eigmult {

/// Arbitrary-precision rational, always kept canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

enum class ScalarKind { Rational, Float };

/// Exact complex rational a + b i. Used for projective points such as
/// (+-i, 1) whose coordinates leave Q but stay inside Q(i).
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(const Rational& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Gaussian(int r) : re(r), im(0) {}              // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return im == 0; }
  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return Rational(re * re + im * im); }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {Rational(a.re + b.re), Rational(a.im + b.im)};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {Rational(a.re - b.re), Rational(a.im - b.im)};
  }
  friend Gaussian operator-(const Gaussian& a) { return {Rational(-a.re), Rational(-a.im)}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational d = b.norm();
    Gaussian num = a * b.conj();
    return {Rational(num.re / d), Rational(num.im / d)};
  }
  Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
  Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

/// Parses "p", "p/q" (optionally signed) into a canonical rational.
/// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Gaussian& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
inline bool is_zero(const Gaussian& z) { return is_zero(z.re) && is_zero(z.im); }

inline double magnitude(const Rational& q) { return std::abs(q.get_d()); }
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Complex& z) { return std::abs(z); }

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational> || std::is_same_v<T, Gaussian>;

template <class>
inline constexpr bool dependent_false_v = false;

/// Value-preserving (exact -> exact) or approximating (exact -> float)
/// conversion between the scalar types used across the library.
template <class To, class From>
To scalar_cast(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else if constexpr (std::is_same_v<From, Rational>) {
    if constexpr (std::is_same_v<To, double>) {
      return v.get_d();
    } else if constexpr (std::is_same_v<To, Complex>) {
      return Complex(v.get_d(), 0.0);
    } else if constexpr (std::is_same_v<To, Gaussian>) {
      return Gaussian(v);
    } else {
      static_assert(dependent_false_v<To>, "unsupported conversion from Rational");
    }
  } else if constexpr (std::is_same_v<From, double>) {
    if constexpr (std::is_same_v<To, Complex>) {
      return Complex(v, 0.0);
    } else {
      static_assert(dependent_false_v<To>, "unsupported conversion from double");
    }
  } else if constexpr (std::is_same_v<From, Gaussian>) {
    if constexpr (std::is_same_v<To, Complex>) {
      return Complex(v.re.get_d(), v.im.get_d());
    } else {
      static_assert(dependent_false_v<To>, "unsupported conversion from Gaussian");
    }
  } else if constexpr (std::is_same_v<From, int>) {
    return To(v);
  } else {
    static_assert(dependent_false_v<To>, "unsupported scalar conversion");
  }
}

/// Convergents of the continued-fraction expansion of x, stopping at the first
/// one that reproduces x to double precision. Used to propose exact candidates
/// for numerically located roots; callers must verify them.
std::vector<Rational> continued_fraction_candidates(double x, int max_terms = 40);

}  // namespace eigmult
