#include <doctest.h>

#include <random>
#include <set>

#include "vantage/constructions.hpp"
#include "vantage/formulas.hpp"
#include "vantage/line_arrangement.hpp"
#include "vantage/midpoints.hpp"
#include "vantage/sphere.hpp"

using namespace vantage;

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

long long big(const BigInt& b) { return b.get_si(); }

template <class F>
F det3(const Vec3<F>& a, const Vec3<F>& b, const Vec3<F>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

template <class F>
bool parallel3(const Vec3<F>& a, const Vec3<F>& b) {
  const F zero(0);
  return a[1] * b[2] - a[2] * b[1] == zero && a[0] * b[2] - a[2] * b[0] == zero && a[0] * b[1] - a[1] * b[0] == zero;
}

// Euler count F = 2 - V + E on the sphere. Vertices on circle i are grouped by
// determinants: circles j and k meet circle i at the same antipodal pair iff
// det(n_i, n_j, n_k) = 0. Each pair on a circle contributes two arcs.
template <class F>
long long euler_sphere_regions(const std::vector<Vec3<F>>& points) {
  std::vector<Vec3<F>> normals;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Vec3<F> d = points[i] - points[j];
      bool dup = false;
      for (const auto& n : normals) dup = dup || parallel3(n, d);
      if (!dup) normals.push_back(d);
    }
  }
  if (normals.empty()) return 1;
  if (normals.size() == 1) return 2;
  const F zero(0);
  long long edges = 0, incidences = 0, vertex_pairs_times_m = 0;
  std::vector<long long> pairs_on(normals.size(), 0);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    std::vector<std::size_t> reps;
    for (std::size_t j = 0; j < normals.size(); ++j) {
      if (j == i) continue;
      bool seen = false;
      for (std::size_t r : reps) seen = seen || det3(normals[i], normals[j], normals[r]) == zero;
      if (!seen) reps.push_back(j);
    }
    pairs_on[i] = static_cast<long long>(reps.size());
    edges += 2 * pairs_on[i];
    incidences += pairs_on[i];
  }
  // Each antipodal pair with multiplicity m is counted once on each of its m circles,
  // so the number of pairs needs the multiplicities; recover them per pair.
  std::set<std::vector<std::size_t>> pairs;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      std::vector<std::size_t> through{i, j};
      for (std::size_t k = 0; k < normals.size(); ++k) {
        if (k != i && k != j && det3(normals[i], normals[j], normals[k]) == zero) through.push_back(k);
      }
      std::sort(through.begin(), through.end());
      pairs.insert(through);
    }
  }
  for (const auto& p : pairs) vertex_pairs_times_m += static_cast<long long>(p.size());
  CHECK(vertex_pairs_times_m == incidences);
  const long long vertices = 2 * static_cast<long long>(pairs.size());
  return 2 - vertices + edges;
}

template <class F>
std::vector<Vec3<F>> as_vec3(const PointConfig& c) {
  std::vector<Vec3<F>> out;
  for (const auto& p : c.points()) out.push_back({F(p[0]), F(p[1]), F(p[2])});
  return out;
}

Planar random_planar(std::mt19937_64& gen, int n, long box) {
  std::uniform_int_distribution<long> c(-box, box);
  Planar pts;
  while (static_cast<int>(pts.size()) < n) {
    Vec2<Rational> p{q(c(gen)), q(c(gen))};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

}  // namespace

TEST_CASE("one-dimensional gap configurations hit every count") {
  for (int n = 2; n <= 9; ++n) {
    for (long k = 2L * n - 2; k <= (static_cast<long>(n) * n - n + 2) / 2; ++k) {
      const auto xs = gap_config_1d(n, k);
      REQUIRE(xs.size() == static_cast<std::size_t>(n));
      CHECK(distinct_midpoints_1d(xs) + 1 == k);
      CHECK(planar_region_count(on_x_axis(xs)) == k);  // parallel bisectors
    }
    CHECK_THROWS(gap_config_1d(n, 2L * n - 3));
    CHECK(distinct_midpoints_1d(equally_spaced_line(n)) + 1 == 2L * n - 2);
  }
}

TEST_CASE("free configurations reach the maximum and depend only on the seed") {
  for (int n = 2; n <= 6; ++n) {
    const Planar a = free_config(n, 40 + n);
    CHECK(planar_region_count(a) == big(max_orderings(n, 2)));
    CHECK(a == free_config(n, 40 + n));
  }
  const Planar s = free_config(3, 5), t = free_config(3, 6);
  const Planar st = free_sum(s, t, 7);
  CHECK(st.size() == 6);
  CHECK(planar_region_count(st) == big(max_orderings(6, 2)));
  const Planar r = rotate_rational(s, 2, 1);
  CHECK(planar_region_count(r) == planar_region_count(s));
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(squared_norm(r[i]) == squared_norm(s[i]));
}

TEST_CASE("planar gadgets match their formulas") {
  for (int k = 2; k <= 3; ++k) CHECK(planar_region_count(trapezoid_gadget(k, 3)) == big(trapezoid_count(k)));
  for (int n = 4; n <= 7; ++n) {
    for (int k = 0; k <= n / 2; ++k) CHECK(planar_region_count(near_max_config(n, k, 11)) == big(max_orderings(n, 2)) - k);
  }
  for (int k = 2; k <= 3; ++k) {
    for (int l = 1; l <= 2; ++l) {
      for (int m = 0; m <= 2; ++m) {
        CHECK(planar_region_count(parallel_lines_gadget(m, k, l, 13)) == big(parallel_gadget_poly(m, k, l)));
      }
    }
  }
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) CHECK(planar_region_count(circle_gadget(n, k, 17)) == big(circle_gadget_count(n, k)));
  }
  for (int pairs = 1; pairs <= 3; ++pairs) {
    CHECK(planar_region_count(parallel_chain_gadget(pairs, 19)) == big(max_orderings(pairs + 3, 2)) - pairs);
  }
}

TEST_CASE("concyclic configurations") {
  // All bisectors pass through the centre, so the count is twice the number of distinct exponent sums.
  auto distinct_sums = [](const std::vector<long>& e) {
    std::set<long> s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) s.insert(e[i] + e[j]);
    }
    return static_cast<long long>(s.size());
  };
  for (const auto& e : std::vector<std::vector<long>>{{0, 1, 2, 3}, {0, 1, 3, 7}, {0, 2, 3, 5, 9}, {1, 4}}) {
    const Planar pts = concyclic_from_exponents(e);
    for (const auto& p : pts) CHECK(squared_norm(p) == q(1));
    CHECK(planar_region_count(pts) == 2 * distinct_sums(e));
  }
  for (int n : {3, 4, 6, 8, 12}) {
    REQUIRE(concyclic_equal_supported(n));
    CHECK(a_S(concyclic_equal(n)).regions_total == 2 * n);
  }
  CHECK_FALSE(concyclic_equal_supported(5));
  CHECK_THROWS_AS(concyclic_equal(5), std::invalid_argument);
}

TEST_CASE("great-circle counts agree with an Euler oracle") {
  std::mt19937_64 gen(21);
  std::uniform_int_distribution<long> c(-4, 4), den(1, 3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 5;
    Spherical pts;
    while (static_cast<int>(pts.size()) < n) {
      Vec3<Rational> p;
      // Small coordinates make coincidences and concurrences common.
      p = inverse_stereographic(q(c(gen), den(gen)), q(c(gen), den(gen)));
      if (trial % 3 == 0 && !pts.empty() && c(gen) > 0) p = {-pts[0][0], -pts[0][1], -pts[0][2]};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const auto s = sphere_arrangement_of(pts);
    CHECK(s.regions_total == euler_sphere_regions(pts));
    CHECK(s.regions_total % 2 == 0);
  }
  for (const auto& name : platonic_names()) {
    const PointConfig p = platonic(name);
    const auto pts = as_vec3<QuadExt>(p);
    CHECK(sphere_count(p).regions_total == euler_sphere_regions(pts));
  }
}

TEST_CASE("platonic solids") {
  const std::map<std::string, long long> expected{
      {"tetrahedron", 24}, {"octahedron", 48}, {"cube", 96}, {"icosahedron", 240}, {"dodecahedron", 1680}};
  for (const auto& name : platonic_names()) {
    const SphereCount s = sphere_count(platonic(name));
    CHECK(s.regions_total == expected.at(name));
    CHECK(s.regions_total % 2 == 0);
  }
  CHECK_THROWS(platonic("torus"));
}

TEST_CASE("free and doubled sphere configurations") {
  for (int n = 2; n <= 5; ++n) {
    const Spherical s = free_sphere_config(n, 30 + n, false);
    for (const auto& p : s) CHECK(squared_norm(p) == q(1));
    CHECK(sphere_arrangement_of(s).regions_total == big(sphere_max(n)));
  }
  for (int n = 3; n <= 5; ++n) {
    const Spherical h = free_sphere_config(n, 50 + n, true);
    for (const auto& p : h) CHECK(p[2] > q(0));
    const Spherical d = doubled(h);
    REQUIRE(d.size() == static_cast<std::size_t>(2 * n));
    const auto s = sphere_arrangement_of(d);
    CHECK(s.circle_count == static_cast<long long>(n) * n);
    CHECK(s.regions_total == big(sphere_doubled_count(n)));
    const auto census = doubled_census(n);
    auto at = [&](int m) { return s.multiplicity_histogram.count(m) ? s.multiplicity_histogram.at(m) : 0LL; };
    CHECK(2 * at(2) == big(census.v4));
    CHECK(2 * at(3) == big(census.v6));
    CHECK(2 * at(4) == big(census.v8));
  }
}

TEST_CASE("concyclic plus one point on the sphere") {
  CHECK(sphere_arrangement_of(concyclic_plus_one(5, 5, 3)).regions_total == 50);
  CHECK(sphere_arrangement_of(concyclic_plus_one(5, 6, 3)).regions_total == 60);
  CHECK(sphere_arrangement_of(concyclic_plus_one(5, 4, 3)).regions_total == 40);
}

TEST_CASE("sphere minimum witnesses") {
  for (int n = 2; n <= 8; ++n) {
    const SphereMinimum m = sphere_min_witness(n);
    CHECK(m.count == big(sphere_min(n)));
    if (m.witness) CHECK(sphere_count(*m.witness).regions_total == m.count);
  }
  const SphereMinimum four = sphere_min_witness(4);
  REQUIRE(four.rectangle.has_value());
  CHECK(sphere_count(*four.rectangle).regions_total == 8);
}

TEST_CASE("stereographic embedding") {
  std::mt19937_64 gen(23);
  std::uniform_int_distribution<long> c(-9, 9), den(1, 5);
  for (int i = 0; i < 200; ++i) {
    const Vec3<Rational> p = inverse_stereographic(q(c(gen), den(gen)), q(c(gen), den(gen)));
    CHECK(squared_norm(p) == q(1));
  }
  int compared = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Planar pts = random_planar(gen, 3 + trial % 3, 6);
    const auto up = embed_on_hemisphere(pts);
    for (const auto& p : up) {
      CHECK(squared_norm(p) == q(1));
      CHECK(p[2] > q(0));
    }
    const auto planar = arrangement_of(pts);
    if (planar.direction_classes != planar.line_count) {
      CHECK_THROWS(plane_to_sphere_count(pts));
      continue;
    }
    ++compared;
    CHECK(plane_to_sphere_count(pts) == sphere_arrangement_of(up).regions_total);
  }
  CHECK(compared > 20);
}
