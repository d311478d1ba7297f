#include "vantage/weighted.hpp"

#include <stdexcept>

#include "vantage/errors.hpp"

namespace vantage {

Weights::Weights(std::vector<Rational> w) : w_(std::move(w)) {
  for (const auto& x : w_) {
    if (x.sign() <= 0) throw std::invalid_argument("weights must be positive");
  }
}

PointConfig::Point weighted_transform(const PointConfig::Point& p, const Weights& w) {
  if (p.size() != w.size()) throw FieldMismatch("weight count does not match the dimension");
  PointConfig::Point out;
  for (std::size_t k = 0; k < p.size(); ++k) out.push_back(p[k] * QuadExt(w[k]));
  return out;
}

PointConfig weighted_transform(const PointConfig& s, const Weights& w) {
  if (static_cast<int>(w.size()) != s.dimension()) throw FieldMismatch("weight count does not match the dimension");
  std::vector<PointConfig::Point> pts;
  for (const auto& p : s.points()) pts.push_back(weighted_transform(p, w));
  // Scaling axes keeps points distinct but not on a sphere.
  return PointConfig(s.dimension(), std::move(pts), false, s.radicand());
}

Ordering ordering_weighted(const PointConfig& s, const PointConfig::Point& v, const Weights& w) {
  return ordering_from_vantage(weighted_transform(s, w), weighted_transform(v, w));
}

Ordering ordering_weighted_direct(const PointConfig& s, const PointConfig::Point& v, const Weights& w) {
  if (static_cast<int>(w.size()) != s.dimension() || v.size() != w.size()) {
    throw FieldMismatch("weight count does not match the dimension");
  }
  std::vector<QuadExt> d;
  for (const auto& p : s.points()) {
    QuadExt acc(0);
    for (std::size_t k = 0; k < p.size(); ++k) acc += QuadExt(w[k] * w[k]) * (p[k] - v[k]) * (p[k] - v[k]);
    d.push_back(acc);
  }
  return ordering_by(d.size(), [&](int i, int j) { return sign_quad(d[i] - d[j]); });
}

Line<Rational> bisector_line_weighted(const Vec2<Rational>& p, const Vec2<Rational>& q, const Weights& w) {
  if (w.size() != 2) throw FieldMismatch("planar weights need two entries");
  if (p == q) throw std::invalid_argument("bisector of coincident points");
  const Rational wx2 = w[0] * w[0];
  const Rational wy2 = w[1] * w[1];
  return Line<Rational>{wx2 * (q[0] - p[0]), wy2 * (q[1] - p[1]),
                        (wx2 * (q[0] * q[0] - p[0] * p[0]) + wy2 * (q[1] * q[1] - p[1] * p[1])) / Rational(2)};
}

}  // namespace vantage
