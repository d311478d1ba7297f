#include <doctest.h>

#include <random>
#include <set>

#include "vantage/constructions.hpp"
#include "vantage/errors.hpp"
#include "vantage/midpoints.hpp"
#include "vantage/ordering.hpp"
#include "vantage/point_config.hpp"
#include "vantage/weighted.hpp"

using namespace vantage;

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

PointConfig::Point pt(std::initializer_list<Rational> xs) {
  PointConfig::Point p;
  for (const auto& x : xs) p.emplace_back(x);
  return p;
}

long long brute_midpoints(const std::vector<Rational>& xs) {
  std::set<std::pair<BigInt, BigInt>> seen;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const Rational m = (xs[i] + xs[j]) / q(2);
      seen.emplace(m.numerator(), m.denominator());
    }
  }
  return static_cast<long long>(seen.size());
}

}  // namespace

TEST_CASE("configuration text round trip") {
  const std::string text =
      "# a comment\n"
      "dim=2 field=Q(sqrt5) sphere=0\n"
      "\n"
      "1/2 0\n"
      "1+1/2√5 -3\n";
  const PointConfig c = PointConfig::parse(text);
  CHECK(c.size() == 2);
  CHECK(c.radicand() == 5);
  CHECK(PointConfig::parse(c.serialize()) == c);

  const PointConfig r = PointConfig::from_rational_2d({{q(1), q(2)}, {q(-3, 7), q(0)}});
  CHECK(r.field_name() == "Q");
  CHECK(PointConfig::parse(r.serialize()) == r);
}

TEST_CASE("configuration parse errors") {
  CHECK_THROWS_AS(PointConfig::parse("1 2\n"), ParseError);
  CHECK_THROWS_AS(PointConfig::parse("dim=4 field=Q sphere=0\n1 2 3 4\n"), ParseError);
  CHECK_THROWS_AS(PointConfig::parse("dim=2 field=Q sphere=0\n1\n"), ParseError);
  CHECK_THROWS_AS(PointConfig::parse("dim=2 field=Q sphere=0\n1 sqrt5\n"), ParseError);
  CHECK_THROWS_AS(PointConfig::parse("dim=2 field=Q sphere=0\n1 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(PointConfig::parse("dim=3 field=Q sphere=1\n1 0 0\n0 2 0\n"), ParseError);
  CHECK_THROWS_AS(PointConfig::parse("dim=2 field=Q(sqrt4) sphere=0\n1 1\n"), ParseError);
  CHECK_NOTHROW(PointConfig::parse("dim=3 field=Q sphere=1\n1 0 0\n0 -1 0\n3/5 4/5 0\n"));
}

TEST_CASE("single vantage orderings") {
  const auto line = PointConfig::from_rational_1d({q(1), q(2), q(3)});
  CHECK(ordering_from_vantage(line, pt({q(0)})).str() == "1 2 3");
  const Ordering tie = ordering_from_vantage(line, pt({q(3, 2)}));
  CHECK(tie.str() == "[1 2] 3");
  CHECK_FALSE(tie.is_strict());
  const auto tri = PointConfig::from_rational_2d({{q(0), q(0)}, {q(4), q(0)}, {q(0), q(3)}});
  const Ordering o = ordering_from_vantage(tri, pt({q(1), q(1)}));
  CHECK(o.ranks() == std::vector<int>{1, 3, 2});
  CHECK(Ordering::parse(o.str()) == o);
  CHECK(Ordering::parse("[2 1] 3") == tie);
  CHECK_THROWS(ordering_from_vantage(tri, pt({q(1)})));
}

TEST_CASE("orderings are invariant under scaling and translation") {
  std::mt19937_64 gen(4);
  std::uniform_int_distribution<long> c(-20, 20), pos(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Vec2<Rational>> pts;
    while (pts.size() < 5) {
      Vec2<Rational> p{q(c(gen)), q(c(gen))};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const Vec2<Rational> v{q(c(gen), 2), q(c(gen), 2)};
    const Rational lambda = q(pos(gen), pos(gen));
    const Vec2<Rational> t{q(c(gen), 3), q(c(gen))};
    std::vector<Vec2<Rational>> moved;
    for (const auto& p : pts) moved.push_back(scaled(p, lambda) + t);
    CHECK(ordering_from_vantage(moved, scaled(v, lambda) + t) == ordering_from_vantage(pts, v));
  }
}

TEST_CASE("weighted preferences") {
  const auto s = PointConfig::from_rational_2d({{q(1), q(2)}, {q(2), q(1)}});
  const Weights w({q(2), q(1)});
  CHECK(weighted_transform(s, w) == PointConfig::from_rational_2d({{q(2), q(2)}, {q(4), q(1)}}));
  CHECK(ordering_weighted(s, pt({q(0), q(0)}), w).ranks() == std::vector<int>{1, 2});
  CHECK(ordering_weighted(s, pt({q(0), q(0)}), Weights({q(1), q(2)})).ranks() == std::vector<int>{2, 1});
  CHECK(weighted_transform(s, Weights({q(1), q(1)})) == s);
  CHECK_THROWS(Weights({q(1), q(0)}));

  auto same_line = [](Line<Rational> a, Line<Rational> b) { return a.canonical() == b.canonical(); };
  CHECK(same_line(bisector_line_weighted({q(0), q(0)}, {q(2), q(0)}, Weights({q(1), q(1)})), {q(1), q(0), q(1)}));
  CHECK(same_line(bisector_line_weighted({q(0), q(0)}, {q(2), q(0)}, Weights({q(2), q(1)})), {q(8), q(0), q(8)}));
  const auto l = bisector_line_weighted({q(0), q(0)}, {q(1), q(1)}, Weights({q(2), q(1)}));
  CHECK(same_line(l, {q(4), q(1), q(5, 2)}));
  CHECK(-l.a / l.b == q(-4));
}

TEST_CASE("weighted ordering against a floating-point distance oracle") {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<long> c(-30, 30), wd(1, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Vec2<Rational>> pts;
    while (pts.size() < 4) {
      Vec2<Rational> p{q(c(gen)), q(c(gen))};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const auto cfg = PointConfig::from_rational_2d(pts);
    const Vec2<Rational> v{q(c(gen), 7), q(c(gen), 5)};
    const Weights w({q(wd(gen), wd(gen)), q(wd(gen), wd(gen))});
    const Ordering got = ordering_weighted(cfg, pt({v[0], v[1]}), w);
    CHECK(got == ordering_weighted_direct(cfg, pt({v[0], v[1]}), w));
    if (!got.is_strict()) continue;
    const auto ranks = got.ranks();
    auto dw = [&](int i) {
      const double dx = (pts[i][0] - v[0]).to_double() * w[0].to_double();
      const double dy = (pts[i][1] - v[1]).to_double() * w[1].to_double();
      return dx * dx + dy * dy;
    };
    for (std::size_t k = 0; k + 1 < ranks.size(); ++k) CHECK(dw(ranks[k] - 1) <= dw(ranks[k + 1] - 1) * (1 + 1e-12));
  }
}

TEST_CASE("midpoints and sum sets") {
  auto ints = [](std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.push_back(q(x));
    return out;
  };
  CHECK(distinct_midpoints_1d(ints({1, 2, 3, 4, 5})) == 7);
  CHECK(distinct_midpoints_1d(ints({1, 2, 4, 5})) == 5);
  CHECK(distinct_midpoints_1d(ints({1, 2, 4, 8})) == 6);
  CHECK(distinct_pairwise_sums(std::vector<long>{1, 2, 3, 4}) == 5);
  CHECK(distinct_pairwise_sums(std::vector<long>{1, 2, 4, 8}) == 6);
  std::vector<long> ten;
  for (long i = 1; i <= 10; ++i) ten.push_back(i);
  CHECK(distinct_pairwise_sums(ten) == 17);
}

TEST_CASE("midpoint counts stay in range; minimal sets are equally spaced for n >= 5") {
  std::mt19937_64 gen(6);
  std::uniform_int_distribution<long> c(0, 14);
  int minimal = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 2 + trial % 7;
    std::set<long> picked;
    while (static_cast<int>(picked.size()) < n) picked.insert(c(gen));
    std::vector<Rational> xs;
    for (long x : picked) xs.push_back(q(x));
    const long long m = distinct_midpoints_1d(xs);
    CHECK(m == brute_midpoints(xs));
    CHECK(m + 1 >= 2LL * n - 2);
    CHECK(m + 1 <= (static_cast<long long>(n) * n - n + 2) / 2);
    if (m == 2LL * n - 3) {
      ++minimal;
      // n = 3 is always minimal and n = 4 has {1,2,4,5}.
      if (n >= 5) CHECK(equally_spaced(xs));
    }
  }
  CHECK(minimal > 0);
  CHECK_FALSE(equally_spaced({q(1), q(2), q(4), q(5)}));
}
