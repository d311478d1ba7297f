#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vantage/field.hpp"
#include "vantage/point_config.hpp"

namespace vantage {

/// a*x + b*y = c. Canonical form divides through by the first non-zero of
/// (a, b), so two lines are equal iff their canonical coefficients are.
template <class F>
struct Line {
  F a{0};
  F b{0};
  F c{0};

  Line canonical() const {
    if (is_zero(a) && is_zero(b)) throw std::invalid_argument("degenerate line");
    const F lead = is_zero(a) ? b : a;
    return Line{a / lead, b / lead, c / lead};
  }
};

template <class F>
int canonical_compare(const Line<F>& l, const Line<F>& m) {
  if (int r = canonical_compare(l.a, m.a)) return r;
  if (int r = canonical_compare(l.b, m.b)) return r;
  return canonical_compare(l.c, m.c);
}

template <class F>
bool operator==(const Line<F>& l, const Line<F>& m) {
  return canonical_compare(l, m) == 0;
}

template <class F>
Line<F> perpendicular_bisector(const Vec2<F>& p, const Vec2<F>& q) {
  if (is_zero_vec(q - p)) throw std::invalid_argument("bisector of coincident points");
  const F half = F(1) / F(2);
  return Line<F>{q[0] - p[0], q[1] - p[1], (squared_norm(q) - squared_norm(p)) * half}.canonical();
}

/// Distinct canonical perpendicular bisectors of all pairs, sorted.
template <class F>
std::vector<Line<F>> bisector_lines(const std::vector<Vec2<F>>& points) {
  std::vector<Line<F>> lines;
  lines.reserve(points.size() * (points.size() - (points.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) lines.push_back(perpendicular_bisector(points[i], points[j]));
  }
  std::sort(lines.begin(), lines.end(), CanonicalLess{});
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

template <class F>
struct ArrangementSummary {
  long long line_count = 0;
  long long direction_classes = 0;
  long long raw_pairs = 0;  // C(n,2) when built from points, 0 otherwise
  std::vector<std::pair<Vec2<F>, int>> vertices;  // intersection point, number of lines through it
  std::map<int, long long> multiplicity_histogram;
  long long regions_total = 0;
  long long regions_bounded = 0;
  long long regions_unbounded = 0;
};

/// Recovers m from the number of line pairs m(m-1)/2 meeting at one vertex.
int lines_through_vertex(long long pairs);

/// Exact region count of an arrangement of lines. Duplicates are merged first.
template <class F>
ArrangementSummary<F> count_regions(std::vector<Line<F>> lines) {
  for (auto& l : lines) l = l.canonical();
  std::sort(lines.begin(), lines.end(), CanonicalLess{});
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

  ArrangementSummary<F> out;
  out.line_count = static_cast<long long>(lines.size());

  std::vector<Vec2<F>> directions;
  for (const auto& l : lines) directions.push_back({l.a, l.b});
  std::sort(directions.begin(), directions.end(), CanonicalLess{});
  directions.erase(std::unique(directions.begin(), directions.end(),
                               [](const auto& u, const auto& v) { return canonical_compare(u, v) == 0; }),
                   directions.end());
  out.direction_classes = static_cast<long long>(directions.size());

  std::vector<Vec2<F>> hits;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& l = lines[i];
      const auto& m = lines[j];
      const F det = l.a * m.b - m.a * l.b;
      if (is_zero(det)) continue;
      hits.push_back({(l.c * m.b - m.c * l.b) / det, (l.a * m.c - m.a * l.c) / det});
    }
  }
  std::sort(hits.begin(), hits.end(), CanonicalLess{});
  long long excess = 0;
  for (std::size_t k = 0; k < hits.size();) {
    std::size_t e = k + 1;
    while (e < hits.size() && canonical_compare(hits[k], hits[e]) == 0) ++e;
    const int m = lines_through_vertex(static_cast<long long>(e - k));
    out.vertices.emplace_back(hits[k], m);
    ++out.multiplicity_histogram[m];
    excess += m - 1;
    k = e;
  }
  out.regions_total = 1 + out.line_count + excess;
  out.regions_unbounded = out.direction_classes >= 2 ? 2 * out.line_count : out.line_count + 1;
  out.regions_bounded = out.regions_total - out.regions_unbounded;
  return out;
}

template <class F>
ArrangementSummary<F> arrangement_of(const std::vector<Vec2<F>>& points) {
  auto out = count_regions(bisector_lines(points));
  const auto n = static_cast<long long>(points.size());
  out.raw_pairs = n * (n - 1) / 2;
  return out;
}

/// Region count without the census, for small-integer planar points
/// (|coordinate| < 2^15). Uses machine integers only; the search hot path.
long long fast_region_count(const std::vector<std::array<std::int64_t, 2>>& points);

/// Clears denominators: returns integer points with the same arrangement
/// combinatorics, or false if they do not fit fast_region_count's range.
bool to_small_integer_points(const std::vector<Vec2<Rational>>& points,
                             std::vector<std::array<std::int64_t, 2>>& out);

/// Region count of a rational planar configuration, using the integer path when it applies.
long long planar_region_count(const std::vector<Vec2<Rational>>& points);

/// Summary type exposed to the CLI: vertex coordinates are dropped so one
/// type serves every scalar field.
struct PlanarSummary {
  long long line_count = 0;
  long long direction_classes = 0;
  long long raw_pairs = 0;
  std::map<int, long long> multiplicity_histogram;
  long long regions_total = 0;
  long long regions_bounded = 0;
  long long regions_unbounded = 0;
};

template <class F>
PlanarSummary strip_vertices(const ArrangementSummary<F>& s) {
  return PlanarSummary{s.line_count,     s.direction_classes, s.raw_pairs,        s.multiplicity_histogram,
                       s.regions_total, s.regions_bounded,   s.regions_unbounded};
}

/// Bisector arrangement of a planar configuration over its own field.
PlanarSummary a_S(const PointConfig& config);

/// True iff the configuration reaches the planar maximum for its size.
bool verify_free(const PointConfig& config);
bool verify_free(const std::vector<Vec2<Rational>>& points);

}  // namespace vantage
