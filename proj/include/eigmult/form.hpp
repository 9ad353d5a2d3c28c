#pragma once

#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "eigmult/errors.hpp"
#include "eigmult/matrix.hpp"
#include "eigmult/scalar.hpp"
#include "eigmult/tensor.hpp"

namespace eigmult {

using Exponent = std::vector<int>;

/// Homogeneous form of a fixed degree in `nvars` variables, stored sparsely
/// as exponent -> coefficient. Zero coefficients are never stored.
template <class T>
class HomogeneousForm {
 public:
  HomogeneousForm() = default;
  HomogeneousForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 1) throw DimensionError("a form needs at least one variable");
    if (degree < 0) throw DimensionError("negative form degree");
  }

  static HomogeneousForm constant(int nvars, const T& c) {
    HomogeneousForm f(nvars, 0);
    f.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return f;
  }
  /// c * x_var^d
  static HomogeneousForm power(int nvars, int var, int d, const T& c = T(1)) {
    HomogeneousForm f(nvars, d);
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[var] = d;
    f.add_term(e, c);
    return f;
  }
  /// sum_j c_j x_j
  static HomogeneousForm linear(std::span<const T> c) {
    HomogeneousForm f(static_cast<int>(c.size()), 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      Exponent e(c.size(), 0);
      e[j] = 1;
      f.add_term(e, c[j]);
    }
    return f;
  }

  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Exponent, T>& terms() const noexcept { return terms_; }

  T coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  void add_term(const Exponent& e, const T& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DimensionError("exponent length differs from the variable count");
    if (std::accumulate(e.begin(), e.end(), 0) != degree_) throw DimensionError("exponent degree differs from form degree");
    if (eigmult::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (eigmult::is_zero(it->second)) terms_.erase(it);
    }
  }

  template <class V = T>
  V evaluate(std::span<const V> x) const {
    if (static_cast<int>(x.size()) != nvars_) throw DimensionError("evaluation point has the wrong length");
    std::vector<std::vector<V>> pw(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      pw[j].push_back(V(1));
      for (int k = 1; k <= degree_; ++k) pw[j].push_back(pw[j].back() * x[j]);
    }
    V acc(0);
    for (const auto& [e, c] : terms_) {
      V term = scalar_cast<V>(c);
      for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] > 0) term = term * pw[j][e[j]];
      acc += term;
    }
    return acc;
  }
  template <class V = T>
  V evaluate(const std::vector<V>& x) const {
    return evaluate<V>(std::span<const V>(x));
  }

  HomogeneousForm derivative(int var) const {
    if (var < 0 || var >= nvars_) throw DimensionError("derivative variable out of range");
    if (degree_ == 0) return HomogeneousForm(nvars_, 0);
    HomogeneousForm d(nvars_, degree_ - 1);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      --f[var];
      d.add_term(f, T(static_cast<long>(e[var])) * c);
    }
    return d;
  }

  friend HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b) {
    check_compatible(a, b);
    HomogeneousForm s = a;
    for (const auto& [e, c] : b.terms_) s.add_term(e, c);
    return s;
  }
  friend HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b) {
    check_compatible(a, b);
    HomogeneousForm s = a;
    for (const auto& [e, c] : b.terms_) s.add_term(e, T(-c));
    return s;
  }
  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.nvars_ != b.nvars_) throw DimensionError("forms in different variable counts");
    HomogeneousForm p(a.nvars_, a.degree_ + b.degree_);
    Exponent e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
        p.add_term(e, ca * cb);
      }
    return p;
  }
  friend HomogeneousForm operator*(const T& s, const HomogeneousForm& a) {
    HomogeneousForm p(a.nvars_, a.degree_);
    for (const auto& [e, c] : a.terms_) p.add_term(e, s * c);
    return p;
  }

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  static void check_compatible(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_) throw DimensionError("forms differ in variables or degree");
  }

  int nvars_ = 1;
  int degree_ = 0;
  std::map<Exponent, T> terms_;
};

using QForm = HomogeneousForm<Rational>;

template <class To, class From>
HomogeneousForm<To> form_cast(const HomogeneousForm<From>& f) {
  HomogeneousForm<To> g(f.nvars(), f.degree());
  for (const auto& [e, c] : f.terms()) g.add_term(e, scalar_cast<To>(c));
  return g;
}

/// All exponents of the given degree, in descending lexicographic order
/// (x1^d first).
std::vector<Exponent> monomials(int nvars, int degree);

/// Slice i (0-based) as the form sum_alpha (X(alpha)-sum of t_{i..}) x^alpha,
/// so that evaluating it at x gives entry i of t x^(m-1).
template <class T>
HomogeneousForm<T> slice_to_form(const Tensor<T>& t, int i) {
  if (i < 0 || i >= t.dim()) throw DimensionError("slice index out of range");
  HomogeneousForm<T> f(t.dim(), t.order() - 1);
  const std::size_t s = t.slice_size();
  for (std::size_t j = 0; j < s; ++j) {
    const T& v = t[static_cast<std::size_t>(i) * s + j];
    if (is_zero(v)) continue;
    f.add_term(trailing_exponent(j, t.order(), t.dim()), v);
  }
  return f;
}

template <class T>
std::vector<HomogeneousForm<T>> slice_forms(const Tensor<T>& t) {
  std::vector<HomogeneousForm<T>> fs;
  for (int i = 0; i < t.dim(); ++i) fs.push_back(slice_to_form(t, i));
  return fs;
}

/// f(L y) as a form in y; L has shape nvars x k.
template <class T>
HomogeneousForm<T> substitute(const HomogeneousForm<T>& f, const Matrix<T>& l) {
  if (static_cast<int>(l.rows()) != f.nvars()) throw DimensionError("substitution matrix has the wrong row count");
  const int k = static_cast<int>(l.cols());
  std::vector<std::vector<HomogeneousForm<T>>> pw(static_cast<std::size_t>(f.nvars()));
  for (int j = 0; j < f.nvars(); ++j) {
    pw[j].push_back(HomogeneousForm<T>::constant(k, T(1)));
    auto lin = HomogeneousForm<T>::linear(l.row(static_cast<std::size_t>(j)));
    for (int p = 1; p <= f.degree(); ++p) pw[j].push_back(pw[j].back() * lin);
  }
  HomogeneousForm<T> out(k, f.degree());
  for (const auto& [e, c] : f.terms()) {
    HomogeneousForm<T> term = HomogeneousForm<T>::constant(k, c);
    for (int j = 0; j < f.nvars(); ++j)
      if (e[j] > 0) term = term * pw[j][e[j]];
    out = out + term;
  }
  return out;
}

/// f / g for exact forms; throws EngineError when g does not divide f.
QForm exact_div(const QForm& f, const QForm& g);

/// Greatest common divisor of forms in at most three variables (zero forms
/// are ignored), normalized to integer coefficients with unit content and a
/// positive lexicographically leading coefficient. A constant gcd is 1.
/// Throws InputError if every form is zero or nvars > 3.
QForm form_gcd(std::span<const QForm> fs);

/// Primitive integer multiple with positive lex-leading coefficient.
QForm normalize_form(const QForm& f);

std::string to_string(const QForm& f);

}  // namespace eigmult
