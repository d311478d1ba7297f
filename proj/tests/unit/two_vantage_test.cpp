#include <doctest.h>

#include <cmath>
#include <random>

#include "vantage/formulas.hpp"
#include "vantage/ordering.hpp"
#include "vantage/two_vantage.hpp"

using namespace vantage;

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

std::vector<Rational> line(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.push_back(q(x));
  return out;
}

}  // namespace

TEST_CASE("two-vantage orderings on a line") {
  const auto xs = line({1, 2, 3, 4});
  CHECK(ordering_two_vantage_1d(xs, q(0), q(1)).str() == "1 2 3 4");
  CHECK(ordering_two_vantage_1d(xs, q(0), q(5)).str() == "[1 2 3 4]");
  CHECK(ordering_two_vantage_1d(xs, q(9), q(7)).str() == "4 3 2 1");
  // 1 and 4 straddle [2, 3] around its midpoint.
  CHECK(ordering_two_vantage_1d(xs, q(2), q(3)).str() == "[2 3] [1 4]");
  CHECK(reduce_to_single_1d(xs, q(0), q(1)) == q(1, 2));
  CHECK_THROWS_AS(reduce_to_single_1d(xs, q(0), q(5)), std::invalid_argument);
}

TEST_CASE("tie classification") {
  CHECK(classify_tie_1d(q(1), q(2), q(0), q(3)) == TieKind::containment);
  CHECK(classify_tie_1d(q(-1), q(4), q(1), q(2)) == TieKind::midpoint);
  CHECK(classify_tie_1d(q(-1), q(5), q(1), q(2)) == TieKind::none);
  CHECK(classify_tie_1d(q(1), q(2), q(3), q(5)) == TieKind::none);
  CHECK(to_string(TieKind::midpoint) == "midpoint");
}

TEST_CASE("two-vantage orderings in the plane against floating point") {
  std::mt19937_64 gen(31);
  std::uniform_int_distribution<long> c(-20, 20);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Vec2<Rational>> pts;
    while (pts.size() < 5) {
      Vec2<Rational> p{q(c(gen)), q(c(gen))};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const Vec2<Rational> v1{q(c(gen), 3), q(c(gen), 7)}, v2{q(c(gen), 5), q(c(gen), 2)};
    const Ordering o = ordering_two_vantage(pts, v1, v2);
    if (!o.is_strict()) continue;
    auto f = [&](int i) {
      auto d = [&](const Vec2<Rational>& v) {
        return std::hypot((pts[i][0] - v[0]).to_double(), (pts[i][1] - v[1]).to_double());
      };
      return d(v1) + d(v2);
    };
    const auto r = o.ranks();
    for (std::size_t k = 0; k + 1 < r.size(); ++k) CHECK(f(r[k] - 1) <= f(r[k + 1] - 1) + 1e-9);
  }
  // Exact tie across different radicands: sqrt(2) + sqrt(8) = sqrt(18) + 0.
  const std::vector<Vec2<Rational>> pts{{q(1), q(1)}, {q(3), q(3)}};
  const Ordering tie = ordering_two_vantage(pts, Vec2<Rational>{q(0), q(0)}, Vec2<Rational>{q(3), q(3)});
  CHECK_FALSE(tie.is_strict());
}

TEST_CASE("up-down sequences and the contiguity check") {
  const Ordering o = Ordering::parse("2 3 1 4");
  CHECK(updown(o) == "101");
  CHECK(contiguity_check(o));
  CHECK_FALSE(contiguity_check(Ordering::parse("1 3 2")));
  CHECK(contiguity_check(Ordering::parse("3 2 4 1 5")));
  CHECK(updown(Ordering::parse("2 1 3"), {3, 2, 1}) == "10");
  CHECK(is_velo_valid("11011101000"));
  CHECK_FALSE(is_velo_valid("10001100"));
  CHECK(is_velo_valid(""));
  CHECK(is_velo_valid("0011"));
  CHECK_THROWS(is_velo_valid("102"));
  // Brute-force counts computed independently with a run-length scan.
  const long long expected[] = {2, 4, 8, 16, 32, 62, 116, 210, 370};
  for (int len = 1; len <= 9; ++len) CHECK(count_velo_valid(len) == expected[len - 1]);
}

TEST_CASE("collinear positions") {
  const std::vector<Vec2<Rational>> pts{{q(2), q(4)}, {q(0), q(0)}, {q(1), q(2)}};
  const auto pos = collinear_positions(pts);
  REQUIRE(pos.size() == 3);
  CHECK(pos[2] == 2);  // either orientation of the line
  CHECK(pos[0] + pos[1] == 4);
  const std::vector<Vec2<Rational>> bent{{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}};
  CHECK(collinear_positions(bent).empty());
}

TEST_CASE("sampler is deterministic, job independent and monotone in the budget") {
  std::vector<Vec2<Rational>> pts{{q(0), q(0)}, {q(5), q(1)}, {q(2), q(7)}, {q(-3), q(4)}};
  const auto a = sample_two_vantage_orderings(pts, 30000, 5, 1);
  const auto b = sample_two_vantage_orderings(pts, 30000, 5, 3);
  CHECK(a.orderings == b.orderings);
  CHECK(a.samples == 30000);
  const auto small = sample_two_vantage_orderings(pts, 9000, 5, 2);
  for (const auto& [ranks, first] : small.orderings) {
    REQUIRE(a.orderings.count(ranks) == 1);
    CHECK(a.orderings.at(ranks) == first);
  }
  for (const auto& [ranks, first] : a.orderings) {
    const Ordering o = Ordering::strict(ranks);
    CHECK(o.is_strict());
  }
}

TEST_CASE("collinear sampling respects the line bounds") {
  for (int n = 3; n <= 6; ++n) {
    std::vector<Vec2<Rational>> pts;
    for (int i = 1; i <= n; ++i) pts.push_back({q(i), q(0)});
    const auto s = sample_two_vantage_orderings(pts, 100000, 2, 1);
    const auto got = static_cast<long>(s.orderings.size());
    CHECK(BigInt(got) <= two_vantage_line_bound(n));
    CHECK(BigInt(got) <= velo_bound(n));
    for (const auto& [ranks, first] : s.orderings) {
      const Ordering o = Ordering::strict(ranks);
      CHECK(contiguity_check(o));
      CHECK(is_velo_valid(updown(o)));
    }
    if (n <= 5) CHECK(BigInt(got) == velo_bound(n));
  }
}
