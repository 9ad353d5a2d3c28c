#include "eigmult/resultant.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "eigmult/unipoly.hpp"

namespace eigmult {

namespace {

template <class T>
void check_system(std::span<const HomogeneousForm<T>> fs) {
  if (fs.empty()) throw DimensionError("resultant of an empty system");
  const int n = static_cast<int>(fs.size());
  for (const auto& f : fs) {
    if (f.nvars() != n) throw DimensionError("resultant needs n forms in n variables");
    if (f.degree() != fs[0].degree()) throw DimensionError("resultant forms must share one degree");
  }
  if (fs[0].degree() < 1) throw DimensionError("resultant forms must have positive degree");
}

template <class T>
bool negligible(const Matrix<T>& m, const T& det) {
  if constexpr (is_exact_v<T>) {
    return is_zero(det);
  } else {
    // Relative to the Hadamard bound prod ||row||.
    double bound = 1.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      double s = 0.0;
      for (const auto& v : m.row(r)) s += std::norm(Complex(v));
      bound *= std::sqrt(s);
    }
    return std::abs(det) <= 1e-12 * bound;
  }
}

int ipow_int(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

template <class T>
std::vector<HomogeneousForm<T>> on_line(std::span<const HomogeneousForm<T>> fs, const T& s) {
  std::vector<HomogeneousForm<T>> gs(fs.begin(), fs.end());
  const int n = static_cast<int>(fs.size());
  for (int i = 0; i < n; ++i) gs[i] = gs[i] + HomogeneousForm<T>::power(n, i, fs[0].degree(), s);
  return gs;
}

// Res along f_i + s x_i^d is a polynomial of degree <= n d^(n-1) in s; its
// value at s = 0 is the resultant sought.
template <class T>
T line_fallback(std::span<const HomogeneousForm<T>> fs) {
  const int n = static_cast<int>(fs.size());
  const int d = fs[0].degree();
  const int bound = n * ipow_int(d, n - 1);
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  if constexpr (is_exact_v<T>) {
    std::vector<Rational> xs, ys;
    const std::size_t need = static_cast<std::size_t>(bound) + 2;
    for (long s = 1; xs.size() < need && s <= static_cast<long>(need) + 256; ++s) {
      auto gs = on_line<T>(fs, Rational(s));
      auto r = macaulay_ratio<T>(gs, identity);
      if (!r) continue;
      xs.emplace_back(s);
      ys.push_back(*r);
    }
    if (xs.size() < need) throw IndeterminateRatio("Macaulay ratio stayed 0/0 along the fallback line");
    try {
      return interpolate(xs, ys, bound).coeff(0);
    } catch (const EngineError&) {
      throw IndeterminateRatio("fallback line values are inconsistent with the resultant degree");
    }
  } else {
    // Chebyshev nodes; an even count keeps s = 0 off the grid.
    int count = bound + 1;
    if (count % 2 != 0) ++count;
    double rho = 1.0;
    for (const auto& f : fs)
      for (const auto& [e, c] : f.terms()) rho = std::max(rho, std::abs(c));
    T num(0), den(0);
    for (int k = 0; k < count; ++k) {
      const double theta = std::numbers::pi * (2.0 * k + 1.0) / (2.0 * count);
      const double s = rho * std::cos(theta);
      auto gs = on_line<T>(fs, T(s));
      auto r = macaulay_ratio<T>(gs, identity);
      if (!r) throw IndeterminateRatio("Macaulay ratio stayed 0/0 at a fallback node");
      const double w = ((k % 2 == 0) ? 1.0 : -1.0) * std::sin(theta) / (0.0 - s);
      num += T(w) * *r;
      den += T(w);
    }
    return num / den;
  }
}

std::string monomial_label(const Exponent& e) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(j + 1);
    if (e[j] > 1) out += "^" + std::to_string(e[j]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::size_t monomial_count(int nvars, int degree) {
  // C(degree + nvars - 1, nvars - 1)
  std::size_t r = 1;
  for (int k = 1; k < nvars; ++k) r = r * static_cast<std::size_t>(degree + k) / static_cast<std::size_t>(k);
  return r;
}

template <class T>
MacaulayMatrix<T> macaulay_matrix(std::span<const HomogeneousForm<T>> fs, std::span<const int> ordering) {
  check_system(fs);
  const int n = static_cast<int>(fs.size());
  const int d = fs[0].degree();
  if (static_cast<int>(ordering.size()) != n) throw DimensionError("variable ordering has the wrong length");
  {
    std::vector<int> sorted(ordering.begin(), ordering.end());
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (sorted[i] != i) throw DimensionError("variable ordering is not a permutation");
  }
  MacaulayMatrix<T> mm;
  mm.nvars = n;
  mm.degree = d;
  mm.target_degree = n * (d - 1) + 1;
  mm.monomials = monomials(n, mm.target_degree);
  const std::size_t size = mm.monomials.size();
  std::map<Exponent, std::size_t> column;
  for (std::size_t c = 0; c < size; ++c) column.emplace(mm.monomials[c], c);
  mm.matrix = Matrix<T>(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    const Exponent& beta = mm.monomials[r];
    int divisible = 0;
    for (int v : beta)
      if (v >= d) ++divisible;
    if (divisible >= 2) mm.minor_indices.push_back(r);
    int form = -1;
    for (int i : ordering)
      if (beta[i] >= d) {
        form = i;
        break;
      }
    Exponent mult = beta;
    mult[form] -= d;
    mm.row_form.push_back(form);
    mm.row_multiplier.push_back(mult);
    Exponent e(static_cast<std::size_t>(n));
    for (const auto& [alpha, c] : fs[form].terms()) {
      for (int j = 0; j < n; ++j) e[j] = alpha[j] + mult[j];
      mm.matrix(r, column.at(e)) = c;
    }
  }
  return mm;
}

template <class T>
std::optional<T> macaulay_ratio(std::span<const HomogeneousForm<T>> fs, std::span<const int> ordering) {
  auto mm = macaulay_matrix<T>(fs, ordering);
  T det_minor(1);
  if (!mm.minor_indices.empty()) {
    Matrix<T> minor = mm.minor();
    det_minor = determinant(minor);
    if (negligible(minor, det_minor)) return std::nullopt;
  }
  return determinant(mm.matrix) / det_minor;
}

template <class T>
T macaulay_resultant(std::span<const HomogeneousForm<T>> fs) {
  check_system(fs);
  const int n = static_cast<int>(fs.size());
  std::vector<int> ordering(static_cast<std::size_t>(n));
  std::iota(ordering.begin(), ordering.end(), 0);
  do {
    if (auto r = macaulay_ratio<T>(fs, ordering)) return *r;
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return line_fallback<T>(fs);
}

template <class T>
T sylvester_resultant(const HomogeneousForm<T>& f, const HomogeneousForm<T>& g) {
  if (f.nvars() != 2 || g.nvars() != 2) throw DimensionError("Sylvester resultant needs binary forms");
  if (f.degree() != g.degree()) throw DimensionError("Sylvester resultant needs equal degrees");
  const int d = f.degree();
  if (d < 1) throw DimensionError("Sylvester resultant needs positive degree");
  const std::size_t size = 2 * static_cast<std::size_t>(d);
  Matrix<T> s(size, size);
  // Coefficient of x1^k x2^(d-k) goes to column shift + (d - k).
  for (int r = 0; r < d; ++r) {
    for (const auto& [e, c] : f.terms()) s(r, r + (d - e[0])) = c;
    for (const auto& [e, c] : g.terms()) s(d + r, r + (d - e[0])) = c;
  }
  return determinant(s);
}

template <class T>
T resultant(std::span<const HomogeneousForm<T>> fs) {
  check_system(fs);
  switch (fs.size()) {
    case 1: return fs[0].coeff(Exponent{fs[0].degree()});
    case 2: return sylvester_resultant(fs[0], fs[1]);
    default: return macaulay_resultant<T>(fs);
  }
}

template <class T>
T det_tensor(const Tensor<T>& t) {
  if (t.dim() > 4) throw DimensionError("tensor determinant supports dimension at most 4");
  auto fs = slice_forms(t);
  return resultant<T>(fs);
}

bool det_symmetrization_check(const Tensor<Rational>& t) { return det_tensor(t) == det_tensor(esym(t)); }

std::string macaulay_csv(const MacaulayMatrix<Rational>& m) {
  std::ostringstream out;
  out << "row,form,multiplier,in_minor";
  for (const auto& e : m.monomials) out << ',' << monomial_label(e);
  out << '\n';
  for (std::size_t r = 0; r < m.monomials.size(); ++r) {
    bool in_minor = std::binary_search(m.minor_indices.begin(), m.minor_indices.end(), r);
    out << monomial_label(m.monomials[r]) << ',' << (m.row_form[r] + 1) << ',' << monomial_label(m.row_multiplier[r])
        << ',' << (in_minor ? 1 : 0);
    for (std::size_t c = 0; c < m.monomials.size(); ++c) out << ',' << to_string(m.matrix(r, c));
    out << '\n';
  }
  return out.str();
}

#define EIGMULT_INSTANTIATE(T)                                                                             \
  template MacaulayMatrix<T> macaulay_matrix<T>(std::span<const HomogeneousForm<T>>, std::span<const int>); \
  template std::optional<T> macaulay_ratio<T>(std::span<const HomogeneousForm<T>>, std::span<const int>);  \
  template T macaulay_resultant<T>(std::span<const HomogeneousForm<T>>);                                   \
  template T sylvester_resultant<T>(const HomogeneousForm<T>&, const HomogeneousForm<T>&);                 \
  template T resultant<T>(std::span<const HomogeneousForm<T>>);

EIGMULT_INSTANTIATE(Rational)
EIGMULT_INSTANTIATE(double)
EIGMULT_INSTANTIATE(Complex)
#undef EIGMULT_INSTANTIATE

template Rational det_tensor<Rational>(const Tensor<Rational>&);
template double det_tensor<double>(const Tensor<double>&);

}  // namespace eigmult
