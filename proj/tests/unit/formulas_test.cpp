#include <doctest.h>

#include <cmath>

#include "vantage/formulas.hpp"

using namespace vantage;

namespace {

BigInt Z(long v) { return BigInt(v); }

// Direct Stirling recurrence, kept separate from the library tables.
BigInt stirling_ref(int n, int k) {
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + (i - 1) * s[i - 1][j];
  }
  return (k < 0 || k > n) ? BigInt(0) : s[n][k];
}

}  // namespace

TEST_CASE("Stirling numbers") {
  for (int n = 1; n <= 20; ++n) {
    BigInt row = 0;
    for (int k = 0; k <= n; ++k) {
      CHECK(stirling1(n, k) == stirling_ref(n, k));
      row += stirling1(n, k);
    }
    CHECK(row == factorial(n));
    CHECK(stirling1(n, n) == 1);
    CHECK(stirling1(n, 1) == factorial(n - 1));
  }
  CHECK(stirling1(5, 0) == 0);
  CHECK(stirling1(5, 6) == 0);
  for (int k = 2; k <= 12; ++k) CHECK(stirling1(k, k - 2) == 2 * binomial(k, 3) + 3 * binomial(k, 4));
}

TEST_CASE("maximum and minimum counts") {
  const long table2[] = {6, 18, 46, 101, 197, 351};
  for (int n = 3; n <= 8; ++n) CHECK(max_orderings(n, 2) == Z(table2[n - 3]));
  CHECK(max_orderings(4, 1) == 7);
  for (int n = 1; n <= 40; ++n) {
    CHECK(max_orderings(n, 1) == Z((static_cast<long>(n) * n - n + 2) / 2));
    CHECK(max_orderings(n, 1) == max_orderings_line_poly(n));
  }
  for (int d = 1; d <= 6; ++d) CHECK(max_orderings(2, d) == 2);
  for (int n = 1; n <= 30; ++n) CHECK(max_orderings_plane_poly(n) == max_orderings(n, 2));
  for (int n = 1; n <= 30; ++n) CHECK(max_orderings_space_poly(n) == max_orderings(n, 3));
  for (int n = 1; n <= 9; ++n) CHECK(max_orderings(n, n - 1) == factorial(n));
  CHECK(max_orderings(4, 9) == 24);  // terms past s(n,1) are zero
  CHECK(min_orderings(8) == 14);
  CHECK(min_orderings(2) == 2);
  CHECK(min_orderings(5) == 8);
  CHECK_THROWS(min_orderings(1));
}

TEST_CASE("M(n,d) is a polynomial of degree 2d once n >= 2d") {
  for (int d = 1; d <= 3; ++d) {
    std::vector<BigInt> v;
    for (int n = 2 * d; n < 2 * d + 2 * d + 6; ++n) v.push_back(max_orderings(n, d));
    for (int order = 0; order < 2 * d + 1; ++order) {
      for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
      v.pop_back();
    }
    for (const auto& x : v) CHECK(x == 0);
  }
}

TEST_CASE("free-sum increment") {
  CHECK(free_sum_increment(2, 2) == 14);
  CHECK(free_sum_increment(1, 1) == 0);
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) CHECK(max_orderings(k, 2) + max_orderings(n - k, 2) + free_sum_increment(k, n - k) == max_orderings(n, 2));
  }
  for (int s = 1; s <= 8; ++s) {
    for (int t = 1; t <= 8; ++t) CHECK(free_sum_increment(s, t) == free_sum_increment(t, s));
  }
}

TEST_CASE("gadget formulas") {
  CHECK(trapezoid_count(2) == 17);
  CHECK(trapezoid_count(1) == 2);
  CHECK(trapezoid_count(3) == 99);
  CHECK(parallel_gadget_poly(0, 2, 1) == 2);
  CHECK(parallel_gadget_poly(0, 3, 1) == 4);
  // The l*s(k,k-2) deficit form agrees with the polynomial everywhere.
  for (long k = 2; k <= 5; ++k) {
    for (long l = 1; l <= 3; ++l) {
      for (long m = 0; m <= 5; ++m) {
        const BigInt poly = parallel_gadget_poly(m, k, l);
        CHECK(poly == parallel_gadget_deficit_form(m, k, l));
        CHECK(poly == max_orderings(static_cast<int>(m + k * l), 2) - l * stirling1(static_cast<int>(k), static_cast<int>(k - 2)));
        // The k*s form coincides only when k == l or s(k,k-2) == 0.
        if (k == l || k == 2) CHECK(poly == parallel_gadget_k_form(m, k, l));
      }
    }
  }
  CHECK(parallel_gadget_k_form(3, 3, 1) == max_orderings(6, 2) - 6);
  CHECK(parallel_gadget_poly(3, 3, 1) == max_orderings(6, 2) - 2);
  for (int n = 2; n <= 12; ++n) {
    CHECK(circle_gadget_count(n, n) == n * (n - 1));
    CHECK(circle_gadget_count(n, 2) == max_orderings(n, 2));
    for (int k = 2; k <= n; ++k) {
      CHECK(circle_gadget_count(n, k) == circle_gadget_poly(n, k));
      CHECK(max_orderings(n, 2) - circle_gadget_count(n, k) == max_orderings(k, 2) - k * (k - 1));
    }
  }
  CHECK(circle_gadget_count(6, 4) == max_orderings(6, 2) - 6);
}

TEST_CASE("sphere formulas") {
  const std::pair<int, long> table4[] = {{4, 24}, {6, 172}, {8, 646}, {12, 3852}, {20, 33632}};
  for (auto [n, m] : table4) {
    CHECK(sphere_max(n) == Z(m));
    CHECK(sphere_min(n) == 2 * n);
  }
  CHECK(sphere_min(1) == 1);
  CHECK(sphere_min(2) == 2);
  CHECK(sphere_min(3) == 6);
  CHECK(sphere_doubled_count(3) == 48);
  CHECK(sphere_doubled_count(4) == 174);
  for (int n = 2; n <= 10; ++n) {
    const auto c = doubled_census(n);
    CHECK(sphere_doubled_count(n) == 2 + c.v4 + 2 * c.v6 + 3 * c.v8);
    CHECK(sphere_max(n) % 2 == 0);
  }
  const double r = sphere_doubled_count(50).get_d() / sphere_max(100).get_d();
  CHECK(std::abs(r - 0.25) < 0.05 * 0.25);
}

TEST_CASE("line regions and the ratio to free lines") {
  CHECK(line_regions(0) == 1);
  CHECK(line_regions(1) == 2);
  CHECK(line_regions(6) == 22);
  double prev = 0;
  for (int n = 10; n <= 200; n += 10) {
    const double r = ratio_to_free(n);
    CHECK(r > prev);
    CHECK(r < 1);
    prev = r;
  }
  CHECK(std::abs(1 - ratio_to_free(200)) < 1e-2);
}

TEST_CASE("Fibonacci bound") {
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  for (int k = 1; k <= 90; ++k) CHECK(fibonacci(k + 2) == fibonacci(k + 1) + fibonacci(k));
  CHECK(velo_bound(6) == 30);
  CHECK(velo_bound(10) == 268);
  CHECK(velo_bound(2) == 2);
  const long b[] = {1, 2, 4, 8, 16, 30, 54, 94, 160, 268};
  for (int n = 2; n <= 10; ++n) CHECK(velo_bound(n) == Z(b[n - 1]));
  for (int n = 1; n <= 20; ++n) CHECK(two_vantage_line_bound(n) == BigInt(1) << (n - 1));
}

TEST_CASE("formula lookup by name") {
  CHECK(formula_by_name("max", {5, 2}) == 46);
  CHECK(formula_by_name("stirling", {5, 3}) == 35);
  CHECK(formula_by_name("binomial", {10, 3}) == 120);
  CHECK_THROWS_AS(formula_by_name("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(formula_by_name("max", {5}), std::invalid_argument);
  for (const auto& f : formula_catalog()) CHECK(f.arity >= 1);
  CHECK(exact_div(BigInt(12), 4) == 3);
  CHECK_THROWS(exact_div(BigInt(13), 4));
}
