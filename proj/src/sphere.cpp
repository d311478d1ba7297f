#include "vantage/sphere.hpp"

#include "vantage/constructions.hpp"
#include "vantage/errors.hpp"
#include "vantage/formulas.hpp"

namespace vantage {

SphereCount sphere_count(const PointConfig& config) {
  if (!config.on_sphere()) throw FieldMismatch("sphere_count needs a spherical configuration");
  if (config.is_rational()) return strip_vertices(sphere_arrangement_of(config.rational_3d()));
  return strip_vertices(sphere_arrangement_of(config.quad_3d()));
}

namespace {

template <class F>
long long u_plus_2b(const std::vector<Vec2<F>>& pts) {
  const auto s = arrangement_of(pts);
  if (s.direction_classes != s.line_count) {
    throw std::invalid_argument("configuration has parallel bisectors");
  }
  return s.regions_unbounded + 2 * s.regions_bounded;
}

}  // namespace

long long plane_to_sphere_count(const std::vector<Vec2<Rational>>& planar) { return u_plus_2b(planar); }

long long plane_to_sphere_count(const PointConfig& planar) {
  if (planar.dimension() != 2) throw FieldMismatch("plane_to_sphere_count needs a planar configuration");
  if (planar.is_rational()) return u_plus_2b(planar.rational_2d());
  return u_plus_2b(planar.quad_2d());
}

Vec3<Rational> inverse_stereographic(const Rational& u, const Rational& v) {
  const Rational r2 = u * u + v * v;
  const Rational h = Rational(1) + r2;
  return {Rational(2) * u / h, Rational(2) * v / h, (Rational(1) - r2) / h};
}

std::vector<Vec3<Rational>> embed_on_hemisphere(const std::vector<Vec2<Rational>>& planar) {
  Rational extent(0);
  for (const auto& p : planar) extent = std::max(extent, abs(p[0]) + abs(p[1]));
  // |x| + |y| < extent + 1 bounds the Euclidean norm, so the image is in the unit disc.
  const Rational scale = Rational(1) / (extent + Rational(1));
  std::vector<Vec3<Rational>> out;
  out.reserve(planar.size());
  for (const auto& p : planar) out.push_back(inverse_stereographic(p[0] * scale, p[1] * scale));
  return out;
}

SphereMinimum sphere_min_witness(int n) {
  if (n < 2) throw std::invalid_argument("sphere_min_witness needs n >= 2");
  SphereMinimum out;
  const auto pts = lift_circle_to_sphere(regular_polygon_cyclotomic(n));
  out.count = sphere_arrangement_of(pts).regions_total;
  if (concyclic_equal_supported(n)) {
    const PointConfig flat = concyclic_equal(n);
    std::vector<PointConfig::Point> lifted;
    const QuadExt three_fifths(Rational(3, 5));
    for (const auto& p : flat.points()) lifted.push_back({p[0] * three_fifths, p[1] * three_fifths, QuadExt(Rational(4, 5))});
    out.witness = PointConfig(3, std::move(lifted), true, flat.radicand());
  } else {
    out.cyclotomic_witness = pts;
  }
  if (n == 4) {
    // A non-square rectangle inscribed in the same circle: corners (+-3/5, +-4/5).
    out.rectangle = PointConfig::from_rational_3d(
        lift_circle_to_sphere(Planar{{Rational(3, 5), Rational(4, 5)},
                                     {Rational(-3, 5), Rational(4, 5)},
                                     {Rational(-3, 5), Rational(-4, 5)},
                                     {Rational(3, 5), Rational(-4, 5)}}),
        true);
  }
  return out;
}

}  // namespace vantage
