#include <doctest.h>

#include <cmath>
#include <random>

#ifdef VANTAGE_HAVE_MPFR
#include <mpfr.h>
#endif

#include "vantage/cyclotomic.hpp"
#include "vantage/errors.hpp"
#include "vantage/quadext.hpp"
#include "vantage/rational.hpp"
#include "vantage/sqrt_compare.hpp"

using namespace vantage;

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

#ifdef VANTAGE_HAVE_MPFR
// Interval value of sqrt(a)+sqrt(b)-sqrt(c)-sqrt(d) at 512 bits; returns -1/+1 when the
// interval excludes zero, 0 when it straddles.
int interval_sign(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  mpfr_t lo, hi, t;
  mpfr_inits2(512, lo, hi, t, static_cast<mpfr_ptr>(nullptr));
  auto add_sqrt = [&](mpfr_t acc, const Rational& x, mpfr_rnd_t rnd, bool negate) {
    mpfr_set_q(t, x.get().get_mpq_t(), negate ? (rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD) : rnd);
    mpfr_sqrt(t, t, negate ? (rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD) : rnd);
    if (negate) {
      mpfr_sub(acc, acc, t, rnd);
    } else {
      mpfr_add(acc, acc, t, rnd);
    }
  };
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  add_sqrt(lo, a, MPFR_RNDD, false);
  add_sqrt(lo, b, MPFR_RNDD, false);
  add_sqrt(lo, c, MPFR_RNDD, true);
  add_sqrt(lo, d, MPFR_RNDD, true);
  add_sqrt(hi, a, MPFR_RNDU, false);
  add_sqrt(hi, b, MPFR_RNDU, false);
  add_sqrt(hi, c, MPFR_RNDU, true);
  add_sqrt(hi, d, MPFR_RNDU, true);
  int s = 0;
  if (mpfr_sgn(lo) > 0) s = 1;
  if (mpfr_sgn(hi) < 0) s = -1;
  mpfr_clears(lo, hi, t, static_cast<mpfr_ptr>(nullptr));
  return s;
}

int mpfr_sign_quad(const QuadExt& x) {
  mpfr_t v, r;
  mpfr_inits2(512, v, r, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_si(r, x.radicand(), MPFR_RNDN);
  mpfr_sqrt(r, r, MPFR_RNDN);
  mpfr_set_q(v, x.radical_part().get().get_mpq_t(), MPFR_RNDN);
  mpfr_mul(v, v, r, MPFR_RNDN);
  mpfr_set_q(r, x.rational_part().get().get_mpq_t(), MPFR_RNDN);
  mpfr_add(v, v, r, MPFR_RNDN);
  const int s = mpfr_sgn(v);
  mpfr_clears(v, r, static_cast<mpfr_ptr>(nullptr));
  return s;
}
#endif

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(q(6, -4).str() == "-3/2");
  CHECK(q(4, 2).str() == "2");
  CHECK(Rational::parse("-10/4") == q(-5, 2));
  CHECK(Rational::parse("+7") == q(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS(q(1) / q(0));
  CHECK(Rational::from_double(0.375) == q(3, 8));
}

TEST_CASE("rational field laws on random triples") {
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = q(num(gen), den(gen)), b = q(num(gen), den(gen)), c = q(num(gen), den(gen));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(Rational::parse((a * b).str()) == a * b);
    CHECK((a * b).denominator() > 0);
  }
}

TEST_CASE("sign_quad examples") {
  CHECK(sign_quad(QuadExt(q(1))) == 1);
  CHECK(sign_quad(QuadExt(q(0))) == 0);
  CHECK(sign_quad(QuadExt(q(9), q(-4), 5)) == 1);
  CHECK(sign_quad(QuadExt(q(-9), q(4), 5)) == -1);
  CHECK(sign_quad(QuadExt(q(-3), q(1), 5)) == -1);  // sqrt5 < 3
}

TEST_CASE("sign_quad antisymmetry and agreement with a numeric oracle") {
  std::mt19937_64 gen(2);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  const long radicands[] = {2, 3, 5, 6, 7, 10};
  for (int i = 0; i < 5000; ++i) {
    const QuadExt x(q(num(gen), den(gen)), q(num(gen), den(gen)), radicands[i % 6]);
    const int s = sign_quad(x);
    CHECK(sign_quad(-x) == -s);
#ifdef VANTAGE_HAVE_MPFR
    CHECK(s == mpfr_sign_quad(x));
#else
    if (std::abs(x.to_double()) > 1e-9) CHECK(s == (x.to_double() > 0 ? 1 : -1));
#endif
  }
}

TEST_CASE("quadratic field arithmetic") {
  const QuadExt phi(q(1, 2), q(1, 2), 5);
  CHECK(phi * phi == phi + QuadExt(q(1)));
  CHECK(QuadExt(q(1)) / phi == phi - QuadExt(q(1)));
  CHECK(phi.norm() == q(-1));
  CHECK(QuadExt::parse(phi.str()) == phi);
  CHECK(QuadExt::parse("2-3/4sqrt7") == QuadExt(q(2), q(-3, 4), 7));
  CHECK(QuadExt::parse("5/3") == QuadExt(q(5, 3)));
  CHECK_THROWS_AS(QuadExt::root(2) + QuadExt::root(3), FieldMismatch);
  CHECK_THROWS_AS(QuadExt::parse("1+2√4"), ParseError);
  CHECK_THROWS_AS(QuadExt::parse("1+2√"), ParseError);
  CHECK(QuadExt::root(2) < QuadExt(q(3, 2)));
  CHECK(QuadExt::root(2) > QuadExt(q(7, 5)));
}

TEST_CASE("cmp_sqrt_sum examples") {
  CHECK(cmp_sqrt_sum(q(4), q(9), q(25), q(0)) == 0);
  CHECK(cmp_sqrt_sum(q(2), q(2), q(8), q(0)) == 0);
  CHECK(cmp_sqrt_sum(q(2), q(3), q(5), q(0)) == 1);
  CHECK(cmp_sqrt_sum(q(5), q(0), q(2), q(3)) == -1);
  CHECK(cmp_sqrt_sum(q(1, 4), q(1, 9), q(25, 36), q(0)) == 0);
  CHECK_THROWS(cmp_sqrt_sum(q(-1), q(1), q(1), q(1)));
}

TEST_CASE("cmp_sqrt_sum against an interval oracle") {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<long> small(0, 12), den(1, 6), pick(0, 3);
  auto value = [&] {
    // Mix perfect squares, small rationals and multiples of one radicand to provoke ties.
    switch (pick(gen)) {
      case 0: {
        const long s = small(gen);
        return q(s * s, den(gen) * den(gen));
      }
      case 1: {
        const long s = small(gen);
        return q(2 * s * s);
      }
      default:
        return q(small(gen), den(gen));
    }
  };
  int ties = 0;
  for (int i = 0; i < 10000; ++i) {
    const Rational a = value(), b = value(), c = value(), d = value();
    const int got = cmp_sqrt_sum(a, b, c, d);
    CHECK(cmp_sqrt_sum(c, d, a, b) == -got);
    CHECK(cmp_sqrt_sum(b, a, d, c) == got);
#ifdef VANTAGE_HAVE_MPFR
    const int oracle = interval_sign(a, b, c, d);
    if (oracle != 0) {
      CHECK(got == oracle);
    } else {
      // 512 bits cannot separate them: they must be equal, and so their squares agree exactly.
      CHECK(got == 0);
      ++ties;
    }
#else
    const double diff = std::sqrt(a.to_double()) + std::sqrt(b.to_double()) - std::sqrt(c.to_double()) -
                        std::sqrt(d.to_double());
    if (std::abs(diff) > 1e-9) CHECK(got == (diff > 0 ? 1 : -1));
    if (got == 0) ++ties;
#endif
  }
  CHECK(ties > 0);
}

TEST_CASE("cyclotomic field basics") {
  for (int n : {5, 7, 9, 10}) {
    for (long k = 0; k < n; ++k) {
      const Cyclotomic c = Cyclotomic::cos_turn(n, k);
      const Cyclotomic s = Cyclotomic::sin_turn(n, k);
      CHECK(c * c + s * s == Cyclotomic(1));
    }
    const Cyclotomic z = Cyclotomic::zeta_power(n, 1);
    Cyclotomic p(1);
    for (int i = 0; i < n; ++i) p *= z;
    CHECK(p == Cyclotomic(1));
    const Cyclotomic x = Cyclotomic::cos_turn(n, 1) + Cyclotomic(q(1, 3));
    CHECK(x * x.inverse() == Cyclotomic(1));
  }
  // cos(2pi/6) = 1/2 collapses to a rational.
  CHECK(Cyclotomic::cos_turn(6, 1) == Cyclotomic(q(1, 2)));
  CHECK(Cyclotomic::cos_turn(5, 1) != Cyclotomic::cos_turn(5, 2));
  CHECK(Cyclotomic::cos_turn(5, 1) == Cyclotomic::cos_turn(5, 4));
}
