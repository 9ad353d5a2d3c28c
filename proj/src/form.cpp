#include "eigmult/form.hpp"

#include <algorithm>

#include "eigmult/unipoly.hpp"

namespace eigmult {

namespace {

void monomials_rec(int var, int left, Exponent& e, std::vector<Exponent>& out) {
  if (var == static_cast<int>(e.size()) - 1) {
    e[var] = left;
    out.push_back(e);
    return;
  }
  for (int k = left; k >= 0; --k) {
    e[var] = k;
    monomials_rec(var + 1, left - k, e, out);
  }
  e[var] = 0;
}

// Bivariate polynomial in (x1, x2): entry k is the coefficient of x1^k, a
// polynomial in x2.
using BiPoly = std::vector<QPoly>;

void trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg1(const BiPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly content(const BiPoly& p) {
  QPoly c;
  for (const auto& q : p) c = gcd(c, q);
  return c;
}

BiPoly primitive_part(const BiPoly& p) {
  QPoly c = content(p);
  BiPoly out;
  for (const auto& q : p) out.push_back(exact_div(q, c));
  return out;
}

BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  const QPoly& lb = b.back();
  while (!a.empty() && deg1(a) >= deg1(b)) {
    const int shift = deg1(a) - deg1(b);
    QPoly la = a.back();
    for (auto& q : a) q = lb * q;
    for (int k = 0; k <= deg1(b); ++k) a[k + shift] -= la * b[k];
    trim(a);
  }
  return a;
}

BiPoly bivariate_gcd(BiPoly a, BiPoly b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  QPoly c = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (deg1(a) < deg1(b)) std::swap(a, b);
  while (!b.empty()) {
    BiPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.empty() ? r : primitive_part(r);
  }
  for (auto& q : a) q = c * q;
  return a;
}

// Dehomogenize a ternary form at x3 = 1.
BiPoly dehomogenize3(const QForm& f) {
  BiPoly p;
  for (const auto& [e, c] : f.terms()) {
    if (static_cast<int>(p.size()) <= e[0]) p.resize(static_cast<std::size_t>(e[0]) + 1);
    p[e[0]] += QPoly::monomial(c, e[1]);
  }
  trim(p);
  return p;
}

int total_degree(const BiPoly& p) {
  int d = -1;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!p[k].is_zero()) d = std::max(d, static_cast<int>(k) + p[k].degree());
  return d;
}

QPoly dehomogenize2(const QForm& f) {
  std::vector<Rational> c(static_cast<std::size_t>(f.degree()) + 1, Rational(0));
  for (const auto& [e, v] : f.terms()) c[e[0]] = v;
  return QPoly(std::move(c));
}

}  // namespace

std::vector<Exponent> monomials(int nvars, int degree) {
  std::vector<Exponent> out;
  Exponent e(static_cast<std::size_t>(nvars), 0);
  monomials_rec(0, degree, e, out);
  return out;
}

QForm exact_div(const QForm& f, const QForm& g) {
  if (g.is_zero()) throw InputError("form division by zero");
  if (f.nvars() != g.nvars()) throw DimensionError("forms in different variable counts");
  if (f.is_zero()) return QForm(f.nvars(), std::max(0, f.degree() - g.degree()));
  if (f.degree() < g.degree()) throw EngineError("form division is not exact");
  QForm q(f.nvars(), f.degree() - g.degree());
  QForm r = f;
  const auto& [ge, gc] = *g.terms().rbegin();
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    Exponent e(re.size());
    for (std::size_t j = 0; j < e.size(); ++j) {
      e[j] = re[j] - ge[j];
      if (e[j] < 0) throw EngineError("form division is not exact");
    }
    QForm t(f.nvars(), q.degree());
    t.add_term(e, Rational(rc / gc));
    q = q + t;
    r = r - t * g;
  }
  return q;
}

QForm normalize_form(const QForm& f) {
  if (f.is_zero()) return f;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(f.terms().rbegin()->second) < 0) scale = -scale;
  return scale * f;
}

QForm form_gcd(std::span<const QForm> fs) {
  std::vector<const QForm*> live;
  for (const auto& f : fs)
    if (!f.is_zero()) live.push_back(&f);
  if (live.empty()) throw InputError("gcd of forms that are all zero");
  const int n = live.front()->nvars();
  for (const auto* f : live)
    if (f->nvars() != n) throw DimensionError("forms in different variable counts");
  if (n > 3) throw InputError("form gcd supports at most three variables");

  if (n == 1) {
    int d = live.front()->degree();
    for (const auto* f : live) d = std::min(d, f->degree());
    return QForm::power(1, 0, d);
  }
  if (n == 2) {
    QPoly g;
    int low = live.front()->degree();
    for (const auto* f : live) {
      QPoly p = dehomogenize2(*f);
      g = gcd(g, p);
      low = std::min(low, f->degree() - p.degree());
    }
    QForm out(2, g.degree() + low);
    for (int k = 0; k <= g.degree(); ++k) out.add_term({k, g.degree() + low - k}, g.coeff(k));
    return normalize_form(out);
  }
  BiPoly g;
  int low = live.front()->degree();
  for (const auto* f : live) {
    BiPoly p = dehomogenize3(*f);
    g = bivariate_gcd(std::move(g), p);
    low = std::min(low, f->degree() - total_degree(p));
  }
  const int dg = total_degree(g);
  QForm out(3, dg + low);
  for (std::size_t a = 0; a < g.size(); ++a)
    for (int b = 0; b <= g[a].degree(); ++b) out.add_term({static_cast<int>(a), b, dg + low - static_cast<int>(a) - b}, g[a].coeff(b));
  return normalize_form(out);
}

std::string to_string(const QForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    std::string coef;
    if (mono.empty()) {
      coef = to_string(c);
    } else if (c == 1) {
      coef = "";
    } else if (c == -1) {
      coef = "-";
    } else {
      coef = to_string(c) + "*";
    }
    std::string term = coef + mono;
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace eigmult
