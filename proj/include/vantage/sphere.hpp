#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vantage/field.hpp"
#include "vantage/line_arrangement.hpp"
#include "vantage/point_config.hpp"

namespace vantage {

/// Bisecting great circles of points on a common sphere centred at the
/// origin, as canonical normals P - Q. Coinciding circles appear once.
template <class F>
std::vector<Vec3<F>> great_circles(const std::vector<Vec3<F>>& points) {
  std::vector<Vec3<F>> normals;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Vec3<F> d = points[i] - points[j];
      if (is_zero_vec(d)) throw std::invalid_argument("coincident points on the sphere");
      normals.push_back(projective_canonical(d));
    }
  }
  std::sort(normals.begin(), normals.end(), CanonicalLess{});
  normals.erase(std::unique(normals.begin(), normals.end(),
                            [](const auto& u, const auto& v) { return canonical_compare(u, v) == 0; }),
                normals.end());
  return normals;
}

template <class F>
struct SphereSummary {
  long long circle_count = 0;
  /// One representative direction per antipodal vertex pair, with the number
  /// of circles through it.
  std::vector<std::pair<Vec3<F>, int>> vertex_pairs;
  std::map<int, long long> multiplicity_histogram;  // per antipodal pair
  long long regions_total = 0;
};

template <class F>
SphereSummary<F> count_sphere_regions(std::vector<Vec3<F>> normals) {
  for (auto& v : normals) {
    if (is_zero_vec(v)) throw std::invalid_argument("zero normal");
    v = projective_canonical(v);
  }
  std::sort(normals.begin(), normals.end(), CanonicalLess{});
  normals.erase(std::unique(normals.begin(), normals.end(),
                            [](const auto& u, const auto& v) { return canonical_compare(u, v) == 0; }),
                normals.end());
  SphereSummary<F> out;
  out.circle_count = static_cast<long long>(normals.size());
  if (normals.empty()) {
    out.regions_total = 1;
    return out;
  }
  std::vector<Vec3<F>> hits;
  hits.reserve(normals.size() * (normals.size() - 1) / 2);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      hits.push_back(projective_canonical(cross(normals[i], normals[j])));
    }
  }
  std::sort(hits.begin(), hits.end(), CanonicalLess{});
  long long excess = 0;
  for (std::size_t k = 0; k < hits.size();) {
    std::size_t e = k + 1;
    while (e < hits.size() && canonical_compare(hits[k], hits[e]) == 0) ++e;
    const int m = lines_through_vertex(static_cast<long long>(e - k));
    out.vertex_pairs.emplace_back(hits[k], m);
    ++out.multiplicity_histogram[m];
    excess += m - 1;
    k = e;
  }
  // Both antipodes of every pair are vertices.
  out.regions_total = 2 + 2 * excess;
  return out;
}

template <class F>
SphereSummary<F> sphere_arrangement_of(const std::vector<Vec3<F>>& points) {
  return count_sphere_regions(great_circles(points));
}

struct SphereCount {
  long long circle_count = 0;
  std::map<int, long long> multiplicity_histogram;
  long long regions_total = 0;
};

template <class F>
SphereCount strip_vertices(const SphereSummary<F>& s) {
  return SphereCount{s.circle_count, s.multiplicity_histogram, s.regions_total};
}

/// Spherical region count of an on-sphere configuration over its own field.
SphereCount sphere_count(const PointConfig& config);

/// u + 2b for a planar configuration; throws if two bisectors are parallel.
long long plane_to_sphere_count(const PointConfig& planar);
long long plane_to_sphere_count(const std::vector<Vec2<Rational>>& planar);

/// Inverse stereographic projection after scaling into the unit disc, so the
/// image lies in the open northern hemisphere of the unit sphere. Exact,
/// rational, and it preserves circles and reflections in lines through the
/// origin.
std::vector<Vec3<Rational>> embed_on_hemisphere(const std::vector<Vec2<Rational>>& planar);
/// Inverse stereographic image of one point (u, v) on the unit sphere.
Vec3<Rational> inverse_stereographic(const Rational& u, const Rational& v);

/// An exact linear functional strictly positive on all points, if one of a
/// few natural candidates works (the coordinate axes and the centroid).
template <class F>
std::optional<Vec3<F>> open_hemisphere_witness(const std::vector<Vec3<F>>& points) {
  std::vector<Vec3<F>> candidates;
  Vec3<F> centroid{F(0), F(0), F(0)};
  for (const auto& p : points) centroid = centroid + p;
  candidates.push_back(centroid);
  for (int axis = 0; axis < 3; ++axis) {
    for (int sgn : {1, -1}) {
      Vec3<F> e{F(0), F(0), F(0)};
      e[axis] = F(sgn);
      candidates.push_back(e);
    }
  }
  for (const auto& c : candidates) {
    if (std::all_of(points.begin(), points.end(), [&](const auto& p) { return F(0) < dot(c, p); })) return c;
  }
  return std::nullopt;
}

struct SphereMinimum {
  long long count = 0;  // counted on the witness, not taken from the formula
  std::optional<PointConfig> witness;  // when the polygon is exact over a quadratic field
  std::vector<Vec3<Cyclotomic>> cyclotomic_witness;  // otherwise
  std::optional<PointConfig> rectangle;  // n == 4 only
};
/// Equally spaced points on one circle of the sphere, counted exactly (n >= 2).
SphereMinimum sphere_min_witness(int n);

}  // namespace vantage
