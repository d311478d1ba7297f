#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vantage/field.hpp"
#include "vantage/quadext.hpp"

namespace vantage {

/// An ordered list of distinct points with exact coordinates over Q or a
/// single quadratic field Q(sqrt D). Indices are 1-based in every public
/// output; the stored vector is 0-based.
class PointConfig {
 public:
  using Point = std::vector<QuadExt>;

  PointConfig() = default;
  /// Validates distinctness, field membership and (if on_sphere) equal norms.
  PointConfig(int dimension, std::vector<Point> points, bool on_sphere = false, long radicand = 0);

  static PointConfig from_rational_2d(const std::vector<Vec2<Rational>>& pts);
  static PointConfig from_rational_1d(const std::vector<Rational>& pts);
  static PointConfig from_rational_3d(const std::vector<Vec3<Rational>>& pts, bool on_sphere);

  /// Parses the text format: a header "dim=<1|2|3> field=<Q|Q(sqrtD)> sphere=<0|1>"
  /// followed by one point per line. Blank lines and '#' comments are skipped.
  static PointConfig parse(const std::string& text);
  static PointConfig read_file(const std::string& path);
  std::string serialize() const;
  void write_file(const std::string& path) const;

  int dimension() const { return dimension_; }
  long radicand() const { return radicand_; }
  bool on_sphere() const { return on_sphere_; }
  bool is_rational() const { return radicand_ == 0; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::string field_name() const;

  // Typed views; the rational ones throw FieldMismatch if a radical is present.
  std::vector<Rational> rational_1d() const;
  std::vector<Vec2<Rational>> rational_2d() const;
  std::vector<Vec3<Rational>> rational_3d() const;
  std::vector<QuadExt> quad_1d() const;
  std::vector<Vec2<QuadExt>> quad_2d() const;
  std::vector<Vec3<QuadExt>> quad_3d() const;

  friend bool operator==(const PointConfig&, const PointConfig&) = default;

 private:
  int dimension_ = 2;
  long radicand_ = 0;
  bool on_sphere_ = false;
  std::vector<Point> points_;
};

std::ostream& operator<<(std::ostream& os, const PointConfig& config);

}  // namespace vantage
