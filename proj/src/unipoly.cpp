#include "eigmult/unipoly.hpp"

#include <cstdio>

namespace eigmult {

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  Rational inv = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = r[k + db] * inv;
    q[k] = c;
    if (is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) r[k + j] -= c * bc[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw EngineError("polynomial division is not exact");
  return q;
}

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return Rational(1 / p.leading()) * p;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

bool is_squarefree(const QPoly& p) { return gcd(p, p.derivative()).degree() <= 0; }

SquarefreeFactorization squarefree_factor(const QPoly& p) {
  if (p.is_zero()) throw InputError("squarefree factorization of the zero polynomial");
  SquarefreeFactorization out{p.leading(), {}};
  QPoly f = monic(p);
  if (f.degree() == 0) return out;
  QPoly fp = f.derivative();
  QPoly a = gcd(f, fp);
  QPoly b = exact_div(f, a);
  QPoly c = exact_div(fp, a);
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    QPoly g = gcd(b, d);
    if (g.degree() > 0) out.factors.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

QPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys, int degree_bound) {
  if (xs.size() != ys.size()) throw InputError("interpolation needs equally many abscissae and values");
  if (degree_bound < 0) throw InputError("negative degree bound");
  const std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
  if (xs.size() < need) throw InputError("too few interpolation points for the degree bound");
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) throw InputError("duplicate interpolation abscissa");
  // Divided differences on the first `need` points.
  std::vector<Rational> dd(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(need));
  for (std::size_t level = 1; level < need; ++level)
    for (std::size_t i = need - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  QPoly p = QPoly::constant(dd[need - 1]);
  for (std::size_t k = need - 1; k-- > 0;) p = p * QPoly::linear_root(xs[k]) + QPoly::constant(dd[k]);
  for (std::size_t i = need; i < xs.size(); ++i)
    if (p.evaluate(xs[i]) != ys[i]) throw EngineError("interpolated polynomial does not reproduce a check point");
  return p;
}

namespace {

template <class T, class Fmt>
std::string format_poly(const UniPoly<T>& p, Fmt fmt) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (is_zero(c[k])) continue;
    std::string v = fmt(c[k]);
    if (!out.empty()) {
      const bool neg = v.front() == '-';
      out += neg ? " - " : " + ";
      if (neg) v.erase(0, 1);
    }
    out += v;
    if (k >= 1) out += "λ";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

std::string to_string(const QPoly& p) {
  return format_poly(p, [](const Rational& q) { return to_string(q); });
}

std::string to_string(const UniPoly<double>& p) {
  return format_poly(p, [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  });
}

}  // namespace eigmult
