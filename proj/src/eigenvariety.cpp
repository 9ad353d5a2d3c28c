#include "eigmult/eigenvariety.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eigmult/random.hpp"
#include "eigmult/resultant.hpp"
#include "eigmult/unipoly.hpp"

namespace eigmult {

namespace {

using CForm = HomogeneousForm<Complex>;

std::vector<Complex> to_complex(const std::vector<Gaussian>& x) {
  std::vector<Complex> out;
  for (const auto& g : x) out.push_back(scalar_cast<Complex>(g));
  return out;
}

double max_abs_coeff(const CForm& f) {
  double s = 0.0;
  for (const auto& [e, c] : f.terms()) s = std::max(s, std::abs(c));
  return s;
}

double sum_abs_coeff(const CForm& f) {
  double s = 0.0;
  for (const auto& [e, c] : f.terms()) s += std::abs(c);
  return s;
}

// Largest relative residual of the forms at x (x is rescaled to max-norm 1).
double relative_residual(const std::vector<CForm>& fs, std::vector<Complex> x) {
  double big = 0.0;
  for (const auto& v : x) big = std::max(big, std::abs(v));
  if (big == 0.0) return std::numeric_limits<double>::infinity();
  for (auto& v : x) v /= big;
  double worst = 0.0;
  double scale = 0.0;
  for (const auto& f : fs) scale = std::max(scale, sum_abs_coeff(f));
  if (scale == 0.0) return 0.0;
  for (const auto& f : fs) worst = std::max(worst, std::abs(f.evaluate<Complex>(x)) / scale);
  return worst;
}

// Gauss-Newton on the forms with the largest coordinate pinned to 1.
std::vector<Complex> polish_point(const std::vector<CForm>& fs, std::vector<Complex> x) {
  const std::size_t n = x.size();
  std::vector<std::vector<CForm>> jac(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(fs[i].derivative(static_cast<int>(j)));
  std::size_t pin = 0;
  for (std::size_t j = 1; j < n; ++j)
    if (std::abs(x[j]) > std::abs(x[pin])) pin = j;
  const Complex s = x[pin];
  for (auto& v : x) v /= s;
  for (int it = 0; it < 10; ++it) {
    Matrix<Complex> j(fs.size(), n - 1);
    std::vector<Complex> rhs(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      rhs[i] = -fs[i].evaluate<Complex>(x);
      std::size_t c = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == pin) continue;
        j(i, c++) = jac[i][k].evaluate<Complex>(x);
      }
    }
    std::vector<Complex> delta;
    try {
      delta = least_squares(j, rhs);
    } catch (const EngineError&) {
      break;
    }
    double step = 0.0;
    std::size_t c = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == pin) continue;
      x[k] += delta[c];
      step = std::max(step, std::abs(delta[c]));
      ++c;
    }
    if (!(step > 1e-16)) break;
  }
  return x;
}

bool exact_satisfies(const Tensor<Rational>& t, const Rational& lambda, const std::vector<Gaussian>& x) {
  auto lhs = contract<Gaussian>(t, std::span<const Gaussian>(x));
  auto pw = entrywise_power<Gaussian>(std::span<const Gaussian>(x), t.order() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(lhs[i] == Gaussian(lambda) * pw[i])) return false;
  return true;
}

void add_point(std::vector<ProjectivePoint>& pts, ProjectivePoint p) {
  for (const auto& q : pts)
    if (same_point(q, p)) return;
  pts.push_back(std::move(p));
}

// g(y1, s, 1) as a polynomial in y1 (s rational).
QPoly restrict_line(const QForm& g, const Rational& s) {
  std::vector<Rational> c(static_cast<std::size_t>(g.degree()) + 1, Rational(0));
  for (const auto& [e, v] : g.terms()) {
    Rational p = v;
    for (int k = 0; k < e[1]; ++k) p *= s;
    c[e[0]] += p;
  }
  return QPoly(std::move(c));
}

// g(y1, s, 1) as a binary form in (y1, z) of degree deg g.
template <class T>
HomogeneousForm<T> restrict_binary(const HomogeneousForm<T>& g, const T& s) {
  HomogeneousForm<T> out(2, g.degree());
  for (const auto& [e, v] : g.terms()) {
    T p = v;
    for (int k = 0; k < e[1]; ++k) p *= s;
    out.add_term({e[0], g.degree() - e[0]}, p);
  }
  return out;
}

// g(y1, y2, 0) as a binary form.
template <class T>
HomogeneousForm<T> at_infinity(const HomogeneousForm<T>& g) {
  HomogeneousForm<T> out(2, g.degree());
  for (const auto& [e, v] : g.terms())
    if (e[2] == 0) out.add_term({e[0], e[1]}, v);
  return out;
}

UniPoly<Complex> restrict_line_complex(const CForm& g, Complex s) {
  std::vector<Complex> c(static_cast<std::size_t>(g.degree()) + 1, Complex(0.0));
  for (const auto& [e, v] : g.terms()) c[e[0]] += v * std::pow(s, e[1]);
  return UniPoly<Complex>(std::move(c));
}

// f(x1, x2) as g(y1, y2, y3) = f(y1, y3), so that restrict_line_complex
// yields f(x, 1).
CForm restrict_binary_lift(const CForm& f) {
  CForm g(3, f.degree());
  for (const auto& [e, v] : f.terms()) g.add_term({e[0], 0, e[1]}, v);
  return g;
}

// g(y1, y2, 0) lifted back to three variables so that restricting to y2 = s
// evaluates the part of g on the line at infinity.
CForm lift_infinity(const CForm& f) {
  CForm g(3, f.degree());
  for (const auto& [e, v] : f.terms())
    if (e[2] == 0) g.add_term(e, v);
  return g;
}

Matrix<Rational> random_change(Rng& rng) {
  for (;;) {
    Matrix<Rational> l(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) l(i, j) = Rational(rng.uniform_int(-3, 3));
    if (!is_zero(determinant(l))) return l;
  }
}

std::vector<Gaussian> map_back(const Matrix<Rational>& l, const std::vector<Gaussian>& y) {
  std::vector<Gaussian> x(3, Gaussian(0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) x[i] += Gaussian(l(i, j)) * y[j];
  return x;
}

std::vector<Complex> map_back(const Matrix<Rational>& l, const std::vector<Complex>& y) {
  return apply<Rational, Complex>(l, std::span<const Complex>(y));
}

std::vector<Rational> close_rationals(double x) {
  std::vector<Rational> out;
  for (const auto& c : continued_fraction_candidates(x))
    if (std::abs(c.get_d() - x) <= 1e-6 * std::max(1.0, std::abs(x))) out.push_back(c);
  return out;
}

// Tries to recognize y1 in Q(i) so that every g vanishes at (y1, r, 1).
std::optional<Gaussian> recognize(const std::vector<QForm>& gs, const Gaussian& r, Complex y1) {
  auto res = close_rationals(y1.real());
  auto ims = close_rationals(y1.imag());
  if (std::abs(y1.real()) < 1e-9) res.insert(res.begin(), Rational(0));
  if (std::abs(y1.imag()) < 1e-9) ims.insert(ims.begin(), Rational(0));
  for (const auto& a : res)
    for (const auto& b : ims) {
      std::vector<Gaussian> y{Gaussian(a, b), r, Gaussian(1)};
      bool ok = std::all_of(gs.begin(), gs.end(), [&](const QForm& g) { return is_zero(g.evaluate<Gaussian>(y)); });
      if (ok) return y[0];
    }
  return std::nullopt;
}

// Common projective zeros of ternary forms of one degree e >= 1 with gcd 1.
std::vector<ProjectivePoint> finite_common_zeros(const std::vector<QForm>& gs_in, std::uint64_t seed) {
  Rng rng(seed);
  const int e = gs_in.front().degree();
  for (int attempt = 0; attempt < 40; ++attempt) {
    Matrix<Rational> l = random_change(rng);
    std::vector<QForm> gs;
    for (const auto& g : gs_in) gs.push_back(substitute(g, l));
    QForm ga(3, e), gb(3, e);
    for (const auto& g : gs) {
      ga = ga + Rational(rng.uniform_int(-5, 5)) * g;
      gb = gb + Rational(rng.uniform_int(-5, 5)) * g;
    }
    const Exponent lead{e, 0, 0};
    if (is_zero(ga.coeff(lead)) || is_zero(gb.coeff(lead))) continue;
    {
      std::vector<QForm> pair{ga, gb};
      if (form_gcd(pair).degree() > 0) continue;
    }
    std::vector<ProjectivePoint> pts;
    // Points on y3 = 0.
    std::vector<QForm> inf;
    for (const auto& g : gs) inf.push_back(at_infinity(g));
    if (std::all_of(inf.begin(), inf.end(), [](const QForm& f) { return f.is_zero(); })) continue;
    for (const auto& p : binary_form_points(form_gcd(inf))) {
      if (p.exact) {
        add_point(pts, exact_point(map_back(l, std::vector<Gaussian>{p.coords[0], p.coords[1], Gaussian(0)})));
      } else {
        auto q = numeric_point(map_back(l, std::vector<Complex>{p.approx[0], p.approx[1], Complex(0.0)}));
        q.defining_factor = p.defining_factor;
        add_point(pts, std::move(q));
      }
    }
    // Affine points: R(s) = Res_y1(ga(y1, s, 1), gb(y1, s, 1)) has degree <= e^2.
    // Common zeros of the pair are filtered exactly against every g_i: the
    // s-coordinates must also be roots of Res_y1(ga, g_i).
    const int bound = e * e;
    auto eliminant = [&](const QForm& other) -> std::optional<QPoly> {
      std::vector<Rational> xs, ys;
      for (int s = 0; s <= bound + 1; ++s) {
        xs.emplace_back(s);
        ys.push_back(sylvester_resultant(restrict_binary(ga, Rational(s)), restrict_binary(other, Rational(s))));
      }
      try {
        return interpolate(xs, ys, bound);
      } catch (const EngineError&) {
        return std::nullopt;
      }
    };
    auto pair_poly = eliminant(gb);
    if (!pair_poly || pair_poly->is_zero()) continue;
    QPoly r_poly = *pair_poly;
    bool consistent = true;
    for (const auto& g : gs) {
      auto rg = eliminant(g);
      if (!rg) {
        consistent = false;
        break;
      }
      if (rg->is_zero()) continue;
      r_poly = gcd(r_poly, *rg);
    }
    if (!consistent) continue;
    std::vector<CForm> cgs;
    for (const auto& g : gs) cgs.push_back(form_cast<Complex>(g));
    for (const auto& root : distinct_roots_exact(r_poly)) {
      if (root.exact && root.value.is_real()) {
        const Rational& r = root.value.re;
        QPoly common;
        for (const auto& g : gs) common = gcd(common, restrict_line(g, r));
        if (common.degree() < 1) continue;
        for (const auto& y : distinct_roots_exact(common)) {
          if (y.exact) {
            add_point(pts, exact_point(map_back(l, std::vector<Gaussian>{y.value, Gaussian(r), Gaussian(1)})));
          } else {
            auto q = numeric_point(map_back(l, std::vector<Complex>{y.approx, Complex(r.get_d(), 0.0), Complex(1.0)}));
            q.defining_factor = y.factor;
            add_point(pts, std::move(q));
          }
        }
        continue;
      }
      const Complex rz = root.approx;
      UniPoly<Complex> pa = restrict_line_complex(form_cast<Complex>(ga), rz);
      for (const auto& cand : roots(pa, 1e-8).roots) {
        std::vector<Complex> y{cand.value, rz, Complex(1.0)};
        if (relative_residual(cgs, y) > 1e-5) continue;
        if (root.exact) {
          if (auto y1 = recognize(gs, root.value, cand.value)) {
            add_point(pts, exact_point(map_back(l, std::vector<Gaussian>{*y1, root.value, Gaussian(1)})));
            continue;
          }
        }
        y = polish_point(cgs, y);
        auto q = numeric_point(map_back(l, y));
        q.defining_factor = root.factor;
        add_point(pts, std::move(q));
      }
    }
    return pts;
  }
  throw EngineError("elimination for isolated eigenvectors did not find a generic projection");
}

std::vector<Gaussian> normalized_exact(std::vector<Gaussian> x) {
  for (std::size_t k = x.size(); k-- > 0;) {
    if (is_zero(x[k])) continue;
    Gaussian s = x[k];
    for (auto& v : x) v = v / s;
    return x;
  }
  throw InputError("projective point with all coordinates zero");
}

std::size_t conic_rank(const QForm& q) {
  Matrix<Rational> m(3, 3);
  for (const auto& [e, c] : q.terms()) {
    std::vector<int> vars;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < e[j]; ++k) vars.push_back(j);
    if (vars[0] == vars[1]) {
      m(vars[0], vars[0]) = c;
    } else {
      m(vars[0], vars[1]) = c / 2;
      m(vars[1], vars[0]) = c / 2;
    }
  }
  return rank(m);
}

void finish(EigenvarietyReport& rep) {
  rep.kappa = static_cast<int>(rep.components.size());
  rep.gm = 0;
  for (const auto& c : rep.components) rep.gm = std::max(rep.gm, c.dimension);
  rep.in_spectrum = rep.kappa > 0;
}

}  // namespace

ProjectivePoint exact_point(std::vector<Gaussian> coords) {
  ProjectivePoint p;
  p.exact = true;
  p.coords = normalized_exact(std::move(coords));
  p.approx = to_complex(p.coords);
  return p;
}

ProjectivePoint numeric_point(std::vector<Complex> x) {
  double big = 0.0;
  for (const auto& v : x) big = std::max(big, std::abs(v));
  if (big == 0.0) throw InputError("projective point with all coordinates zero");
  std::size_t k = 0;
  while (std::abs(x[k]) < big * (1.0 - 1e-9)) ++k;
  const Complex s = x[k];
  for (auto& v : x) v /= s;
  ProjectivePoint p;
  p.exact = false;
  p.approx = std::move(x);
  return p;
}

bool same_point(const ProjectivePoint& a, const ProjectivePoint& b, double tol) {
  if (a.approx.size() != b.approx.size()) return false;
  if (a.exact && b.exact) return a.coords == b.coords;
  double na = 0.0, nb = 0.0;
  for (const auto& v : a.approx) na = std::max(na, std::abs(v));
  for (const auto& v : b.approx) nb = std::max(nb, std::abs(v));
  for (std::size_t i = 0; i < a.approx.size(); ++i)
    for (std::size_t j = i + 1; j < a.approx.size(); ++j)
      if (std::abs(a.approx[i] * b.approx[j] - a.approx[j] * b.approx[i]) > tol * na * nb) return false;
  return true;
}

std::vector<QForm> eigen_system(const Tensor<Rational>& t, const Rational& lambda) {
  auto fs = slice_forms(t);
  for (int i = 0; i < t.dim(); ++i) fs[i] = fs[i] - QForm::power(t.dim(), i, t.order() - 1, lambda);
  return fs;
}

std::vector<ProjectivePoint> binary_form_points(const QForm& g) {
  if (g.nvars() != 2) throw DimensionError("binary form expected");
  if (g.is_zero()) throw InputError("zeros of the zero form");
  std::vector<ProjectivePoint> pts;
  if (g.degree() < 1) return pts;
  const int d = g.degree();
  if (is_zero(g.coeff({d, 0}))) pts.push_back(exact_point({Gaussian(1), Gaussian(0)}));
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
  for (const auto& [e, v] : g.terms()) c[e[0]] = v;
  QPoly q(std::move(c));
  if (q.degree() < 1) return pts;
  for (const auto& r : distinct_roots_exact(q)) {
    if (r.exact) {
      pts.push_back(exact_point({r.value, Gaussian(1)}));
    } else {
      auto p = numeric_point({r.approx, Complex(1.0)});
      p.defining_factor = r.factor;
      pts.push_back(std::move(p));
    }
  }
  return pts;
}

EigenvarietyReport eigenvectors_for(const Tensor<Rational>& t, const Rational& lambda, std::uint64_t seed) {
  const int n = t.dim();
  if (n < 1 || n > 3) throw DimensionError("exact eigenvarieties are supported for n <= 3");
  EigenvarietyReport rep;
  rep.lambda = to_string(lambda);
  rep.lambda_value = Complex(lambda.get_d(), 0.0);
  rep.exact = true;
  auto fs = eigen_system(t, lambda);
  if (std::all_of(fs.begin(), fs.end(), [](const QForm& f) { return f.is_zero(); })) {
    Component c;
    c.dimension = n;
    c.whole_space = true;
    rep.components.push_back(c);
    if (n == 2) rep.common_root_count = -1;
    finish(rep);
    return rep;
  }
  if (n == 1) {
    finish(rep);
    return rep;
  }
  std::vector<ProjectivePoint> points;
  if (n == 2) {
    QForm g = form_gcd(fs);
    rep.common_root_count = g.degree();
    points = binary_form_points(g);
  } else {
    QForm h = form_gcd(fs);
    if (h.degree() >= 1) {
      std::vector<QForm> hs{h, h.derivative(0), h.derivative(1), h.derivative(2)};
      QForm sq = normalize_form(exact_div(h, form_gcd(hs)));
      Component c;
      c.dimension = 2;
      c.factor = sq;
      if (sq.degree() == 1) {
        rep.components.push_back(c);
      } else if (sq.degree() == 2) {
        rep.components.push_back(c);
        if (conic_rank(sq) == 2) rep.components.push_back(c);  // a pair of distinct lines
      } else {
        c.factored = false;
        rep.complete = false;
        rep.components.push_back(c);
      }
    }
    std::vector<QForm> gs;
    for (const auto& f : fs)
      if (!f.is_zero()) gs.push_back(exact_div(f, h));
    if (gs.front().degree() >= 1) {
      for (auto& p : finite_common_zeros(gs, seed)) {
        bool on_surface = false;
        if (h.degree() >= 1) {
          if (p.exact) {
            on_surface = is_zero(h.evaluate<Gaussian>(p.coords));
          } else {
            on_surface = relative_residual({form_cast<Complex>(h)}, p.approx) <= 1e-8;
          }
        }
        if (!on_surface) points.push_back(std::move(p));
      }
    }
  }
  for (auto& p : points) {
    if (p.exact && !exact_satisfies(t, lambda, p.coords))
      throw InvariantViolation("reported eigenvector does not satisfy the eigen-equation exactly");
    Component c;
    c.dimension = 1;
    if (!p.exact) {
      c.residual = eigen_residual(tensor_cast<double>(t), rep.lambda_value, p.approx);
      rep.max_residual = std::max(rep.max_residual, c.residual);
    }
    c.point = std::move(p);
    rep.components.push_back(std::move(c));
  }
  finish(rep);
  return rep;
}

double eigen_residual(const Tensor<double>& t, Complex lambda, std::span<const Complex> x) {
  auto lhs = contract<Complex>(t, x);
  double big = 0.0;
  for (const auto& v : x) big = std::max(big, std::abs(v));
  const std::size_t s = t.slice_size();
  double worst = 0.0;
  for (int i = 0; i < t.dim(); ++i) {
    double scale = std::abs(lambda);
    for (std::size_t j = 0; j < s; ++j) scale += std::abs(t[i * s + j]);
    scale *= std::pow(big, t.order() - 1);
    Complex r = lhs[i] - lambda * std::pow(x[i], t.order() - 1);
    worst = std::max(worst, scale > 0.0 ? std::abs(r) / scale : std::abs(r));
  }
  return worst;
}

EigenvarietyReport eigenvectors_numeric(const Tensor<double>& t, Complex lambda, double tol, std::uint64_t seed) {
  const int n = t.dim();
  if (n != 2 && n != 3) throw DimensionError("numeric eigenvarieties are supported for n = 2, 3");
  EigenvarietyReport rep;
  rep.exact = false;
  rep.lambda_value = lambda;
  {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", lambda.real(), lambda.imag());
    rep.lambda = buf;
  }
  const int d = t.order() - 1;
  std::vector<CForm> fs;
  double tscale = std::abs(lambda);
  for (double v : t.entries()) tscale = std::max(tscale, std::abs(v));
  for (int i = 0; i < n; ++i) fs.push_back(form_cast<Complex>(slice_to_form(t, i)) - CForm::power(n, i, d, lambda));
  bool all_zero = true;
  for (const auto& f : fs) all_zero = all_zero && max_abs_coeff(f) <= tol * std::max(1.0, tscale);
  if (all_zero) {
    Component c;
    c.dimension = n;
    c.whole_space = true;
    rep.components.push_back(c);
    finish(rep);
    return rep;
  }
  std::vector<ProjectivePoint> pts;
  auto consider = [&](std::vector<Complex> x) {
    if (relative_residual(fs, x) > 1e-4) return;
    x = polish_point(fs, x);
    if (eigen_residual(t, lambda, x) > tol) return;
    add_point(pts, numeric_point(x));
  };
  if (n == 2) {
    consider({Complex(1.0), Complex(0.0)});
    std::size_t pick = max_abs_coeff(fs[0]) >= max_abs_coeff(fs[1]) ? 0 : 1;
    UniPoly<Complex> p = restrict_line_complex(restrict_binary_lift(fs[pick]), Complex(1.0));
    if (p.degree() >= 1)
      for (const auto& r : roots(p, 1e-8).roots) consider({r.value, Complex(1.0)});
  } else {
    Rng rng(seed);
    bool done = false;
    for (int attempt = 0; attempt < 20 && !done; ++attempt) {
      Matrix<Complex> l = matrix_cast<Complex>(random_change(rng));
      std::vector<CForm> gs;
      for (const auto& f : fs) gs.push_back(substitute(f, l));
      CForm ga(3, d), gb(3, d);
      for (const auto& g : gs) {
        ga = ga + Complex(static_cast<double>(rng.uniform_int(-5, 5))) * g;
        gb = gb + Complex(static_cast<double>(rng.uniform_int(-5, 5))) * g;
      }
      const Exponent lead{d, 0, 0};
      if (std::abs(ga.coeff(lead)) <= 1e-8 * max_abs_coeff(ga) || std::abs(gb.coeff(lead)) <= 1e-8 * max_abs_coeff(gb))
        continue;
      auto to_x = [&](const std::vector<Complex>& y) { return apply<Complex, Complex>(l, std::span<const Complex>(y)); };
      // y3 = 0
      UniPoly<Complex> pinf = restrict_line_complex(lift_infinity(ga), Complex(1.0));
      if (pinf.degree() >= 1)
        for (const auto& r : roots(pinf, 1e-8).roots) consider(to_x({r.value, Complex(1.0), Complex(0.0)}));
      // y3 = 1: R(s) = Res_y1(ga(y1, s, 1), gb(y1, s, 1)), degree <= d^2,
      // recovered by a DFT on the unit circle.
      const int k_nodes = d * d + 2;
      std::vector<Complex> vals(static_cast<std::size_t>(k_nodes));
      double peak = 0.0;
      for (int k = 0; k < k_nodes; ++k) {
        Complex s = std::polar(1.0, 2.0 * std::numbers::pi * k / k_nodes);
        vals[k] = sylvester_resultant(restrict_binary(ga, s), restrict_binary(gb, s));
        peak = std::max(peak, std::abs(vals[k]));
      }
      std::vector<Complex> coeffs(static_cast<std::size_t>(d * d) + 1);
      for (int j = 0; j <= d * d; ++j) {
        Complex acc = 0.0;
        for (int k = 0; k < k_nodes; ++k) acc += vals[k] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / k_nodes);
        coeffs[j] = acc / static_cast<double>(k_nodes);
      }
      for (auto& c : coeffs)
        if (std::abs(c) <= 1e-14 * peak) c = 0.0;
      UniPoly<Complex> rp(coeffs);
      if (rp.is_zero() || peak == 0.0) {
        rep.complete = false;
        done = true;
        break;
      }
      if (rp.degree() >= 1)
        for (const auto& r : roots(rp, 1e-8).roots) {
          UniPoly<Complex> pa = restrict_line_complex(ga, r.value);
          if (pa.degree() < 1) continue;
          for (const auto& y1 : roots(pa, 1e-8).roots) consider(to_x({y1.value, r.value, Complex(1.0)}));
        }
      done = true;
    }
    if (!done) throw EngineError("numeric elimination did not find a generic projection");
  }
  for (auto& p : pts) {
    Component c;
    c.dimension = 1;
    c.residual = eigen_residual(t, lambda, p.approx);
    rep.max_residual = std::max(rep.max_residual, c.residual);
    c.point = std::move(p);
    rep.components.push_back(std::move(c));
  }
  finish(rep);
  return rep;
}

int gm(const Tensor<Rational>& t, const Rational& lambda) { return eigenvectors_for(t, lambda).gm; }

KernelCheck kernel_check(const Tensor<Rational>& t, const Matrix<Rational>& a, std::uint64_t seed) {
  if (static_cast<int>(a.rows()) != t.dim()) throw DimensionError("factor matrix has the wrong row count");
  KernelCheck out;
  out.kernel = nullspace(a.transposed());
  out.kernel_dim = out.kernel.size();
  out.full_column_rank = rank(a) == a.cols();
  out.holds = true;
  Rng rng(seed);
  auto annihilated = [&](const std::vector<Rational>& x) {
    auto y = contract<Rational>(t, std::span<const Rational>(x));
    return std::all_of(y.begin(), y.end(), [](const Rational& v) { return is_zero(v); });
  };
  for (const auto& v : out.kernel) out.holds = out.holds && annihilated(v);
  if (!out.kernel.empty()) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rational> x(static_cast<std::size_t>(t.dim()), Rational(0));
      for (const auto& v : out.kernel) {
        Rational c = rng.rational(9, 3);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * v[i];
      }
      out.holds = out.holds && annihilated(x);
    }
  }
  if (out.full_column_rank) {
    auto at = a.transposed();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> x(static_cast<std::size_t>(t.dim()));
      for (auto& v : x) v = rng.rational(9, 3);
      auto ax = apply<Rational, Rational>(at, std::span<const Rational>(x));
      bool in_kernel = std::all_of(ax.begin(), ax.end(), [](const Rational& v) { return is_zero(v); });
      if (!in_kernel && annihilated(x)) out.holds = false;
    }
  }
  return out;
}

}  // namespace eigmult
