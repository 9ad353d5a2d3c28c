#include "eigmult/scalar.hpp"

#include <cctype>
#include <cmath>
#include <vector>

#include "eigmult/errors.hpp"

namespace eigmult {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  Integer p = parse_integer(num);
  Integer q = 1;
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
    q = parse_integer(den);
    if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Gaussian& z) {
  if (z.is_real()) return to_string(z.re);
  std::string imag;
  Rational a = abs(z.im);
  if (a == 1) {
    imag = "i";
  } else {
    imag = to_string(a) + "i";
  }
  if (is_zero(z.re)) return sgn(z.im) < 0 ? "-" + imag : imag;
  return to_string(z.re) + (sgn(z.im) < 0 ? "-" : "+") + imag;
}

std::vector<Rational> continued_fraction_candidates(double x, int max_terms) {
  std::vector<Rational> out;
  if (!std::isfinite(x)) return out;
  // Convergents h/k of x; stop once they match x to double precision.
  Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  double rest = x;
  for (int term = 0; term < max_terms; ++term) {
    double a = std::floor(rest);
    if (std::abs(a) > 1e18) break;
    Integer ai(a);
    Integer h = ai * h_prev + h_prev2;
    Integer k = ai * k_prev + k_prev2;
    Rational c(h, k);
    c.canonicalize();
    out.push_back(c);
    if (std::abs(c.get_d() - x) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    double frac = rest - a;
    if (frac < 1e-300) break;
    rest = 1.0 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    if (k > Integer("1000000000000")) break;
  }
  return out;
}

}  // namespace eigmult
