#include "eigmult/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace eigmult {

int RootList::total_multiplicity() const {
  int s = 0;
  for (const auto& r : roots) s += r.multiplicity;
  return s;
}

namespace {

constexpr int kMaxIterations = 500;
constexpr int kRestarts = 4;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerResult {
  Complex p, dp;
  double scale;  // sum |a_k| |z|^k
};

HornerResult horner(const std::vector<Complex>& a, Complex z) {
  const std::size_t d = a.size() - 1;
  Complex p = a[d], dp = 0.0;
  double scale = std::abs(a[d]);
  const double az = std::abs(z);
  for (std::size_t k = d; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    scale = scale * az + std::abs(a[k]);
  }
  return {p, dp, scale};
}

std::vector<Complex> initial_guesses(const std::vector<Complex>& a, std::mt19937_64* rng) {
  const std::size_t d = a.size() - 1;
  double radius = 0.0;
  const double lead = std::abs(a[d]);
  for (std::size_t k = 0; k < d; ++k) {
    double c = std::abs(a[k]);
    if (c == 0.0) continue;
    radius = std::max(radius, std::pow(c / lead, 1.0 / static_cast<double>(d - k)));
  }
  if (radius == 0.0) radius = 1.0;
  std::vector<Complex> z(d);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  for (std::size_t k = 0; k < d; ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.7;
    double r = radius;
    if (rng) {
      angle += jitter(*rng);
      r *= 1.0 + 0.3 * jitter(*rng);
    }
    z[k] = std::polar(r, angle);
  }
  return z;
}

bool aberth_iterate(const std::vector<Complex>& a, std::vector<Complex>& z) {
  const std::size_t d = z.size();
  std::vector<bool> done(d, false);
  std::size_t remaining = d;
  const double tol_backward = 8.0 * static_cast<double>(d) * kEps;
  for (int it = 0; it < kMaxIterations && remaining > 0; ++it) {
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      auto h = horner(a, z[i]);
      if (std::abs(h.p) <= tol_backward * h.scale) {
        done[i] = true;
        --remaining;
        continue;
      }
      Complex ratio = h.dp == Complex(0.0) ? Complex(1.0) : h.p / h.dp;
      Complex sum = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i && z[i] != z[j]) sum += 1.0 / (z[i] - z[j]);
      Complex w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[i] -= w;
      if (std::abs(w) <= 1e-13 * std::abs(z[i])) {
        done[i] = true;
        --remaining;
      }
    }
  }
  return remaining == 0;
}

std::vector<Complex> trimmed(const UniPoly<Complex>& p) { return p.coeffs(); }

// sum_l |c_l| r^l
double abs_scale(const UniPoly<Complex>& p, double r) {
  double s = 0.0;
  const auto& c = p.coeffs();
  for (std::size_t l = c.size(); l-- > 0;) s = s * r + std::abs(c[l]);
  return s;
}

struct Cluster {
  Complex center;
  int mult;
  double diam;
};

double diameter(const std::vector<Complex>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, std::abs(pts[i] - pts[j]));
  return d;
}

std::vector<Cluster> cluster(const std::vector<Complex>& z, const UniPoly<Complex>& p, double tol) {
  const int deg = static_cast<int>(z.size());
  std::vector<UniPoly<Complex>> ders{p};
  for (int j = 1; j <= deg; ++j) ders.push_back(ders.back().derivative());
  std::vector<bool> used(z.size(), false);
  std::vector<Cluster> out;
  for (int k = deg; k >= 2; --k) {
    const double radius = 2.0 * std::pow(tol, 1.0 / k);
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (used[i]) continue;
      std::vector<std::size_t> cand;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (!used[j]) cand.push_back(j);
      if (static_cast<int>(cand.size()) < k) break;
      std::stable_sort(cand.begin(), cand.end(),
                       [&](std::size_t a, std::size_t b) { return std::abs(z[a] - z[i]) < std::abs(z[b] - z[i]); });
      cand.resize(static_cast<std::size_t>(k));
      std::vector<Complex> pts;
      Complex c = 0.0;
      for (auto j : cand) {
        pts.push_back(z[j]);
        c += z[j];
      }
      c /= static_cast<double>(k);
      const double r = std::max(1.0, std::abs(c));
      const double diam = diameter(pts);
      if (diam > radius * r) continue;
      bool flat = true;
      for (int j = 0; j < k && flat; ++j)
        flat = std::abs(ders[j].evaluate(c)) <= tol * abs_scale(ders[j], r);
      if (!flat) continue;
      for (auto j : cand) used[j] = true;
      // Newton on p^(k-1), which has a simple root at a k-fold root of p.
      Complex refined = c;
      for (int step = 0; step < 8; ++step) {
        Complex f = ders[k - 1].evaluate(refined);
        Complex df = ders[k].evaluate(refined);
        if (df == Complex(0.0)) break;
        Complex delta = f / df;
        refined -= delta;
        if (std::abs(delta) <= 1e-15 * r) break;
      }
      if (std::isfinite(refined.real()) && std::isfinite(refined.imag()) && std::abs(refined - c) <= diam + tol * r)
        c = refined;
      out.push_back({c, k, diam});
    }
  }
  for (std::size_t i = 0; i < z.size(); ++i)
    if (!used[i]) out.push_back({z[i], 1, 0.0});
  // Any two reported roots closer than 2 tol are merged.
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < out.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < out.size() && !merged; ++j) {
        double dist = std::abs(out[i].center - out[j].center);
        if (dist > 2.0 * tol) continue;
        int m = out[i].mult + out[j].mult;
        Complex c = (static_cast<double>(out[i].mult) * out[i].center + static_cast<double>(out[j].mult) * out[j].center) /
                    static_cast<double>(m);
        out[i] = {c, m, std::max({out[i].diam, out[j].diam, dist})};
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
      }
  }
  return out;
}

bool less_complex(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

bool is_real_poly(const UniPoly<Complex>& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Complex& c) { return c.imag() == 0.0; });
}

RootList numeric_roots(const UniPoly<Complex>& p, double tol) {
  if (p.is_zero()) throw InputError("roots of the zero polynomial");
  if (!(tol > 0.0)) throw InputError("cluster tolerance must be positive");
  RootList out;
  out.tolerance = tol;
  int zeros = 0;
  while (p.coeff(zeros) == Complex(0.0)) ++zeros;
  std::vector<Complex> rest(p.coeffs().begin() + zeros, p.coeffs().end());
  UniPoly<Complex> q(rest);
  const bool real = is_real_poly(p);
  if (zeros > 0) out.roots.push_back({Complex(0.0), zeros, true, Rational(0), -1, 0.0});
  if (q.degree() >= 1) {
    auto z = aberth_roots(q);
    for (const auto& c : cluster(z, q, tol)) {
      Complex v = c.center;
      if (real && std::abs(v.imag()) <= std::max(c.diam, 1e-14 * std::max(1.0, std::abs(v)))) v = {v.real(), 0.0};
      out.roots.push_back({v, c.mult, false, Rational(0), -1, c.diam / tol});
    }
  }
  // A numeric root that lands within 2 tol of an exact zero root joins it.
  if (zeros > 0) {
    for (std::size_t i = 1; i < out.roots.size();) {
      if (std::abs(out.roots[i].value) <= 2.0 * tol) {
        out.roots[0].multiplicity += out.roots[i].multiplicity;
        out.roots[0].exact = false;
        out.roots[0].spread = std::max(out.roots[0].spread, std::abs(out.roots[i].value) / tol);
        out.roots.erase(out.roots.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
  }
  std::stable_sort(out.roots.begin(), out.roots.end(),
                   [](const Root& a, const Root& b) { return less_complex(a.value, b.value); });
  return out;
}

using LComplex = std::complex<long double>;

// Newton polish of a simple root of an exact polynomial in extended precision.
Complex polish(const QPoly& f, Complex z0) {
  std::vector<long double> c;
  for (const auto& v : f.coeffs()) c.push_back(static_cast<long double>(v.get_d()));
  LComplex z(z0.real(), z0.imag());
  for (int it = 0; it < 6; ++it) {
    LComplex p = c.back(), dp = 0.0L;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + c[k];
    }
    if (dp == LComplex(0.0L)) break;
    LComplex step = p / dp;
    if (!std::isfinite(static_cast<double>(std::abs(step)))) break;
    z -= step;
    if (std::abs(step) <= 1e-18L * std::max<long double>(1.0L, std::abs(z))) break;
  }
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// Rescales an exact polynomial to integer coefficients of moderate size
// before converting, so doubles neither overflow nor lose everything.
UniPoly<Complex> to_complex(const QPoly& f) {
  double big = 0.0;
  for (const auto& v : f.coeffs()) big = std::max(big, std::abs(v.get_d()));
  std::vector<Complex> c;
  for (const auto& v : f.coeffs()) c.emplace_back(big > 0 ? v.get_d() / big : 0.0, 0.0);
  return UniPoly<Complex>(std::move(c));
}

}  // namespace

std::vector<Complex> aberth_roots(const UniPoly<Complex>& p, std::uint64_t seed) {
  if (p.degree() < 1) return {};
  std::vector<Complex> a = trimmed(p);
  if (p.degree() == 1) return {-a[0] / a[1]};
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    auto z = initial_guesses(a, attempt == 0 ? nullptr : &rng);
    if (aberth_iterate(a, z)) return z;
  }
  throw ConvergenceError("Aberth-Ehrlich iteration did not converge for a degree-" + std::to_string(p.degree()) +
                         " polynomial");
}

RootList roots(const UniPoly<Complex>& p, double cluster_tol) { return numeric_roots(p, cluster_tol); }

RootList roots(const UniPoly<double>& p, double cluster_tol) {
  return numeric_roots(poly_cast<Complex>(p), cluster_tol);
}

RootList roots(const QPoly& p, double cluster_tol) {
  if (p.is_zero()) throw InputError("roots of the zero polynomial");
  (void)cluster_tol;
  RootList out;
  out.exact_multiplicities = true;
  int zeros = 0;
  while (is_zero(p.coeff(zeros))) ++zeros;
  QPoly rest(std::vector<Rational>(p.coeffs().begin() + zeros, p.coeffs().end()));
  if (zeros > 0) {
    out.factors.emplace_back(QPoly::linear_root(Rational(0)), zeros);
    out.roots.push_back({Complex(0.0), zeros, true, Rational(0), 0, 0.0});
  }
  auto sqf = squarefree_factor(rest);
  for (auto& [factor, e] : sqf.factors) {
    const int idx = static_cast<int>(out.factors.size());
    out.factors.emplace_back(factor, e);
    QPoly f = factor;
    // Rational roots: continued-fraction candidates of the real numeric roots.
    for (const auto& z : aberth_roots(to_complex(f))) {
      if (f.degree() < 1) break;
      if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
      for (const auto& cand : continued_fraction_candidates(z.real())) {
        if (std::abs(cand.get_d() - z.real()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
        if (!is_zero(f.evaluate(cand))) continue;
        out.roots.push_back({Complex(cand.get_d(), 0.0), e, true, cand, idx, 0.0});
        f = exact_div(f, QPoly::linear_root(cand));
        break;
      }
    }
    if (f.degree() >= 1) {
      for (const auto& z : aberth_roots(to_complex(f))) {
        Complex v = polish(f, z);
        if (std::abs(v.imag()) <= 1e-14 * std::max(1.0, std::abs(v))) v = {v.real(), 0.0};
        out.roots.push_back({v, e, false, Rational(0), idx, 0.0});
      }
    }
  }
  std::stable_sort(out.roots.begin(), out.roots.end(),
                   [](const Root& a, const Root& b) { return less_complex(a.value, b.value); });
  return out;
}

}  // namespace eigmult

namespace eigmult {

namespace {

std::vector<Rational> nearby_candidates(double x) {
  std::vector<Rational> out;
  for (const auto& c : continued_fraction_candidates(x))
    if (std::abs(c.get_d() - x) <= 1e-6 * std::max(1.0, std::abs(x))) out.push_back(c);
  return out;
}

}  // namespace

std::vector<AlgebraicRoot> distinct_roots_exact(const QPoly& p) {
  if (p.is_zero()) throw InputError("roots of the zero polynomial");
  std::vector<AlgebraicRoot> out;
  if (p.degree() < 1) return out;
  QPoly f = monic(exact_div(p, gcd(p, p.derivative())));
  for (const auto& z0 : aberth_roots(to_complex(f))) {
    if (f.degree() < 1) break;
    const Complex z = polish(f, z0);
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) <= 1e-6 * scale) {
      for (const auto& c : nearby_candidates(z.real())) {
        if (!is_zero(f.evaluate(c))) continue;
        out.push_back({true, Gaussian(c), Complex(c.get_d(), 0.0), QPoly::linear_root(c)});
        f = exact_div(f, QPoly::linear_root(c));
        break;
      }
      continue;
    }
    bool found = false;
    for (const auto& a : nearby_candidates(z.real())) {
      for (const auto& b : nearby_candidates(std::abs(z.imag()))) {
        Gaussian g(a, b);
        if (!is_zero(f.evaluate<Gaussian>(g))) continue;
        // x^2 - 2a x + (a^2 + b^2) has roots a +- bi.
        QPoly quad(std::vector<Rational>{Rational(a * a + b * b), Rational(-2 * a), Rational(1)});
        out.push_back({true, g, Complex(a.get_d(), b.get_d()), quad});
        out.push_back({true, g.conj(), Complex(a.get_d(), -b.get_d()), quad});
        f = exact_div(f, quad);
        found = true;
        break;
      }
      if (found) break;
    }
  }
  if (f.degree() >= 1) {
    for (const auto& z : aberth_roots(to_complex(f))) {
      Complex v = polish(f, z);
      if (std::abs(v.imag()) <= 1e-14 * std::max(1.0, std::abs(v))) v = {v.real(), 0.0};
      out.push_back({false, Gaussian(0), v, f});
    }
  }
  return out;
}

}  // namespace eigmult
