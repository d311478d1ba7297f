#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vantage/cyclotomic.hpp"
#include "vantage/field.hpp"
#include "vantage/point_config.hpp"

namespace vantage {

using Planar = std::vector<Vec2<Rational>>;
using Spherical = std::vector<Vec3<Rational>>;

/// Default number of attempts for rejection-sampled generators.
inline constexpr int kDefaultAttempts = 100;

// ---- one dimension --------------------------------------------------------

/// Integer points on a line whose midpoints cut R into exactly k intervals.
/// Valid for 2n-2 <= k <= (n^2-n+2)/2 (and k = 1 when n = 1).
std::vector<Rational> gap_config_1d(int n, long k);
/// 1, 2, ..., n.
std::vector<Rational> equally_spaced_line(int n);
/// The same points on the x-axis of the plane.
Planar on_x_axis(const std::vector<Rational>& xs);

// ---- free placement -------------------------------------------------------

/// Random small-integer planar points, resampled until the bisector
/// arrangement reaches the planar maximum.
Planar free_config(int n, std::uint64_t seed, int attempts = kDefaultAttempts);

/// Random rational points on the unit sphere, resampled until the count
/// reaches the spherical maximum. With hemisphere set, all have z > 0.
Spherical free_sphere_config(int n, std::uint64_t seed, bool hemisphere, int attempts = kDefaultAttempts);

/// Moves T by a random rational rotation and translation and merges it with
/// S, retrying until the merged count equals a_S + a_T + g(|S|, |T|).
Planar free_sum(const Planar& s, const Planar& t, std::uint64_t seed, int attempts = kDefaultAttempts);

/// Merges with a target count instead of the free-sum formula.
Planar free_sum_to(const Planar& s, const Planar& t, long long target, std::uint64_t seed,
                   int attempts = kDefaultAttempts);

/// Rotation by the angle of the Pythagorean triple (a^2-b^2, 2ab, a^2+b^2).
Planar rotate_rational(const Planar& pts, long a, long b);
Planar translate(const Planar& pts, const Vec2<Rational>& offset);

// ---- planar gadgets -------------------------------------------------------

/// 2k points with the k-1 parallel pairs P1P2 || P3P4, P1P3 || P5P6, ...
Planar trapezoid_gadget(int k, std::uint64_t seed, int attempts = kDefaultAttempts);

/// First `pairs`+3 points of a chain where P_{d-1}P_d || P_1P_{d-2}; each
/// step adds one independent parallel pair, so the count is M(pairs+3) - pairs.
Planar parallel_chain_gadget(int pairs, std::uint64_t seed, int attempts = kDefaultAttempts);

/// n points whose count is exactly M(n) - k, for 0 <= k <= n/2 (n >= 4).
Planar near_max_config(int n, int k, std::uint64_t seed, int attempts = kDefaultAttempts);

/// m free points and k points on each of l parallel lines.
Planar parallel_lines_gadget(int m, int k, int l, std::uint64_t seed, int attempts = kDefaultAttempts);

/// k points on a circle with distinct bisectors plus n-k free points.
Planar circle_gadget(int n, int k, std::uint64_t seed, int attempts = kDefaultAttempts);

/// Integer grid {1..k} x {1..l}.
Planar grid_lines(int k, int l);

// ---- concyclic configurations ---------------------------------------------

/// Points w^a on the unit circle for w = (3+4i)/5, which has infinite order.
/// Bisectors of (a_i, a_j) and (a_k, a_l) coincide iff a_i + a_j = a_k + a_l.
Planar concyclic_from_exponents(const std::vector<long>& exponents);

/// Unit-circle points at angles 2 pi a / order, over Q(zeta).
std::vector<Vec2<Cyclotomic>> cyclotomic_circle_points(int order, const std::vector<long>& steps);
/// Regular n-gon on the unit circle, over Q(zeta).
std::vector<Vec2<Cyclotomic>> regular_polygon_cyclotomic(int n);

/// Regular n-gon with coordinates in Q or one quadratic field.
/// Supported n: 2, 3, 4, 6, 8, 12; otherwise throws std::invalid_argument.
PointConfig concyclic_equal(int n);
bool concyclic_equal_supported(int n);

/// m concyclic points with exactly t distinct bisectors, m <= t <= C(m,2).
/// Rational when possible (t >= 2m-3), cyclotomic otherwise.
std::vector<Vec2<Cyclotomic>> concyclic_with_bisectors(int m, long t);

/// Lifts unit-circle points onto the circle z = 4/5 of the unit sphere.
template <class F>
std::vector<Vec3<F>> lift_circle_to_sphere(const std::vector<Vec2<F>>& pts) {
  std::vector<Vec3<F>> out;
  const F three_fifths = F(3) / F(5);
  const F four_fifths = F(4) / F(5);
  for (const auto& p : pts) out.push_back({p[0] * three_fifths, p[1] * three_fifths, four_fifths});
  return out;
}

/// n-1 concyclic points with 2t spherical regions plus one extra point,
/// retried until the sphere count is 2nt.
std::vector<Vec3<Cyclotomic>> concyclic_plus_one(int n, long t, std::uint64_t seed, int attempts = kDefaultAttempts);

// ---- sphere ---------------------------------------------------------------

const std::vector<std::string>& platonic_names();
PointConfig platonic(const std::string& name);

/// S together with -S; S must lie in an open hemisphere.
PointConfig doubled(const PointConfig& s);
Spherical doubled(const Spherical& s);

/// Converts to the file-level configuration type.
PointConfig to_config(const Planar& pts);
PointConfig to_config(const Spherical& pts);

std::vector<Vec2<Cyclotomic>> to_cyclotomic(const Planar& pts);
std::vector<Vec3<Cyclotomic>> to_cyclotomic(const Spherical& pts);
/// Rational view when no coordinate involves a root of unity.
std::optional<Spherical> to_rational(const std::vector<Vec3<Cyclotomic>>& pts);

}  // namespace vantage
