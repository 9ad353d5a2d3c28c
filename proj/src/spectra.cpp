#include "eigmult/spectra.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "eigmult/form.hpp"
#include "eigmult/resultant.hpp"

namespace eigmult {

namespace {

template <class T>
std::vector<HomogeneousForm<T>> shifted_forms(const std::vector<HomogeneousForm<T>>& fs, const T& lambda) {
  const int n = static_cast<int>(fs.size());
  std::vector<HomogeneousForm<T>> gs;
  gs.reserve(fs.size());
  for (int i = 0; i < n; ++i) gs.push_back(HomogeneousForm<T>::power(n, i, fs[i].degree(), lambda) - fs[i]);
  return gs;
}

template <class T>
std::optional<T> charpoly_sample(const std::vector<HomogeneousForm<T>>& fs, const T& lambda) {
  auto gs = shifted_forms(fs, lambda);
  if (gs.size() <= 2) return resultant<T>(gs);
  std::vector<int> identity(gs.size());
  std::iota(identity.begin(), identity.end(), 0);
  return macaulay_ratio<T>(gs, identity);
}

}  // namespace

int charpoly_degree(int n, int m) { return n * static_cast<int>(ipow(static_cast<std::size_t>(m - 1), n - 1)); }

QPoly char_poly(const Tensor<Rational>& t) {
  if (t.dim() > 4) throw DimensionError("characteristic polynomial supports dimension at most 4");
  const int big_n = charpoly_degree(t.dim(), t.order());
  const auto fs = slice_forms(t);
  const std::size_t need = static_cast<std::size_t>(big_n) + 2;
  std::vector<Rational> xs, ys;
  for (long k = 0; xs.size() < need; ++k) {
    if (k > static_cast<long>(need) + 1000) throw IndeterminateRatio("too many singular sample points for chi");
    Rational lambda(k);
    auto v = charpoly_sample(fs, lambda);
    if (!v) continue;
    xs.push_back(lambda);
    ys.push_back(*v);
  }
  QPoly chi;
  try {
    chi = interpolate(xs, ys, big_n);
  } catch (const EngineError&) {
    throw InvariantViolation("characteristic polynomial has degree above n(m-1)^(n-1)");
  }
  if (chi.degree() != big_n || chi.leading() != 1)
    throw InvariantViolation("characteristic polynomial is not monic of degree n(m-1)^(n-1)");
  return chi;
}

NumericCharPoly char_poly_numeric(const Tensor<double>& t) {
  if (t.dim() > 4) throw DimensionError("characteristic polynomial supports dimension at most 4");
  const int big_n = charpoly_degree(t.dim(), t.order());
  const auto fs_real = slice_forms(t);
  std::vector<HomogeneousForm<Complex>> fs;
  for (const auto& f : fs_real) fs.push_back(form_cast<Complex>(f));
  // Radius: at least 1 and at least a row-sum bound on the eigenvalues.
  double radius = 1.0;
  const std::size_t s = t.slice_size();
  for (int i = 0; i < t.dim(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < s; ++j) row += std::abs(t[i * s + j]);
    radius = std::max(radius, row);
  }
  auto sample = [&](Complex z) {
    auto v = charpoly_sample(fs, z);
    if (!v) {
      auto gs = shifted_forms(fs, z);
      return macaulay_resultant<Complex>(gs);
    }
    return *v;
  };
  // One DFT per circle of radius 1, 2, 4, ... up to the bound. Coefficient j
  // is taken from the circle minimizing max|chi| / rho^j, which balances the
  // rounding error across low and high coefficients.
  const int k_nodes = big_n + 2;
  std::vector<Complex> coeffs(static_cast<std::size_t>(k_nodes));
  std::vector<double> best(static_cast<std::size_t>(k_nodes), std::numeric_limits<double>::infinity());
  for (double rho = 1.0;; rho = std::min(2.0 * rho, radius)) {
    std::vector<Complex> values(static_cast<std::size_t>(k_nodes));
    double peak = 0.0;
    for (int k = 0; k < k_nodes; ++k) {
      values[k] = sample(std::polar(rho, 2.0 * std::numbers::pi * k / k_nodes));
      peak = std::max(peak, std::abs(values[k]));
    }
    for (int j = 0; j < k_nodes; ++j) {
      const double err = peak / std::pow(rho, j);
      if (err >= best[j]) continue;
      best[j] = err;
      Complex acc = 0.0;
      for (int k = 0; k < k_nodes; ++k) acc += values[k] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / k_nodes);
      coeffs[j] = acc / (static_cast<double>(k_nodes) * std::pow(rho, j));
    }
    if (rho >= radius) break;
  }
  if (std::abs(coeffs[big_n + 1]) > 1e-6 || std::abs(coeffs[big_n] - 1.0) > 1e-6)
    throw InvariantViolation("numeric characteristic polynomial is not monic of degree n(m-1)^(n-1)");
  std::vector<double> real(static_cast<std::size_t>(big_n) + 1);
  for (int j = 0; j < big_n; ++j) real[j] = coeffs[j].real();
  real[big_n] = 1.0;
  NumericCharPoly out{UniPoly<double>(real), 0.0, false};
  const Complex checks[2] = {std::polar(0.61 * radius, 0.37), std::polar(0.83 * radius, 2.11)};
  for (const auto& z : checks) {
    Complex direct = sample(z);
    Complex fitted = out.poly.evaluate<Complex>(z);
    double scale = 0.0;
    for (std::size_t j = 0; j < real.size(); ++j) scale += std::abs(real[j]) * std::pow(std::abs(z), j);
    double res = std::abs(direct - fitted) / std::max(scale, std::abs(direct));
    out.residual = std::max(out.residual, res);
  }
  out.flagged = out.residual > 1e-7;
  return out;
}

int Spectrum::am(const Rational& lambda) const {
  if (mode != Mode::Exact) throw InputError("exact multiplicity requested from a numeric spectrum");
  // The squarefree factors are pairwise coprime, so at most one vanishes.
  for (const auto& [f, e] : eigs.factors)
    if (is_zero(f.evaluate(lambda))) return e;
  return 0;
}

int Spectrum::am_near(Complex z, double tol) const {
  int s = 0;
  for (const auto& r : eigs.roots)
    if (std::abs(r.value - z) <= tol) s += r.multiplicity;
  return s;
}

Spectrum spectrum(const Tensor<Rational>& t, double cluster_tol) {
  Spectrum sp;
  sp.mode = Mode::Exact;
  sp.degree = charpoly_degree(t.dim(), t.order());
  sp.charpoly = char_poly(t);
  sp.eigs = roots(sp.charpoly, cluster_tol);
  if (sp.eigs.total_multiplicity() != sp.degree) throw InvariantViolation("multiplicities do not sum to N");
  if (sp.charpoly.coeff(sp.degree - 1) != -trace(t))
    throw InvariantViolation("lambda^(N-1) coefficient differs from -trace");
  if (sp.charpoly.coeff(0) != det_tensor(Rational(-1) * t))
    throw InvariantViolation("constant term differs from Det(-t)");
  return sp;
}

Spectrum spectrum(const Tensor<double>& t, double cluster_tol) {
  Spectrum sp;
  sp.mode = Mode::Numeric;
  sp.degree = charpoly_degree(t.dim(), t.order());
  auto cp = char_poly_numeric(t);
  sp.charpoly_numeric = cp.poly;
  sp.residual = cp.residual;
  sp.flagged = cp.flagged;
  sp.eigs = roots(cp.poly, cluster_tol);
  if (sp.eigs.total_multiplicity() != sp.degree) throw InvariantViolation("multiplicities do not sum to N");
  const double tr = trace(t);
  double scale = 1.0;
  for (double c : cp.poly.coeffs()) scale = std::max(scale, std::abs(c));
  if (std::abs(cp.poly.coeff(sp.degree - 1) + tr) > 1e-7 * scale)
    throw InvariantViolation("lambda^(N-1) coefficient differs from -trace");
  const double det = det_tensor(-1.0 * t);
  if (std::abs(cp.poly.coeff(0) - det) > 1e-7 * std::max(scale, std::abs(det)))
    throw InvariantViolation("constant term differs from Det(-t)");
  return sp;
}

QPoly upper_triangular_charpoly(const Tensor<Rational>& t) {
  if (!is_upper_triangular(t)) throw InputError("tensor is not upper triangular");
  const int e = static_cast<int>(ipow(static_cast<std::size_t>(t.order() - 1), t.dim() - 1));
  QPoly chi = QPoly::constant(Rational(1));
  std::vector<int> idx(static_cast<std::size_t>(t.order()));
  for (int i = 0; i < t.dim(); ++i) {
    std::fill(idx.begin(), idx.end(), i);
    chi *= pow(QPoly::linear_root(t.at(idx)), e);
  }
  return chi;
}

}  // namespace eigmult
