#include "vantage/sqrt_compare.hpp"

#include <stdexcept>

namespace vantage {

int sign_plus_sqrt(const Rational& f, const Rational& g, const Rational& p) {
  if (p.sign() < 0) throw std::domain_error("square root of a negative rational");
  const int sf = f.sign();
  const int sg = p.is_zero() ? 0 : g.sign();
  if (sg == 0) return sf;
  if (sf == 0 || sf == sg) return sg;
  const Rational lhs = f * f;
  const Rational rhs = g * g * p;
  if (lhs > rhs) return sf;
  if (lhs < rhs) return sg;
  return 0;
}

int cmp_sqrt_sum(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (a.sign() < 0 || b.sign() < 0 || c.sign() < 0 || d.sign() < 0) {
    throw std::domain_error("cmp_sqrt_sum needs non-negative arguments");
  }
  // Both sides are >= 0, so compare squares: (e + 2 sqrt(p)) - 2 sqrt(q).
  const Rational e = a + b - c - d;
  const Rational p = a * b;
  const Rational q = c * d;
  const int u = sign_plus_sqrt(e, Rational(2), p);
  if (u < 0) return -1;
  if (u == 0) return q.is_zero() ? 0 : -1;
  // u > 0: compare u^2 = e^2 + 4p + 4e sqrt(p) against 4q.
  return sign_plus_sqrt(e * e + Rational(4) * (p - q), Rational(4) * e, p);
}

}  // namespace vantage
