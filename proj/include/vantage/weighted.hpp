#pragma once

#include <vector>

#include "vantage/line_arrangement.hpp"
#include "vantage/ordering.hpp"
#include "vantage/point_config.hpp"

namespace vantage {

/// Positive per-axis weights; the weighted distance scales axis k by w_k.
class Weights {
 public:
  explicit Weights(std::vector<Rational> w);
  std::size_t size() const { return w_.size(); }
  const Rational& operator[](std::size_t k) const { return w_[k]; }
  const std::vector<Rational>& values() const { return w_; }

 private:
  std::vector<Rational> w_;
};

PointConfig weighted_transform(const PointConfig& s, const Weights& w);
PointConfig::Point weighted_transform(const PointConfig::Point& p, const Weights& w);

/// Ordering by weighted distance, computed on the transformed configuration.
Ordering ordering_weighted(const PointConfig& s, const PointConfig::Point& v, const Weights& w);

/// Ordering by weighted squared distance sum_k w_k^2 (p_k - v_k)^2, evaluated directly.
Ordering ordering_weighted_direct(const PointConfig& s, const PointConfig::Point& v, const Weights& w);

/// Locus of equal weighted distance to p and q in the plane (not canonicalized).
Line<Rational> bisector_line_weighted(const Vec2<Rational>& p, const Vec2<Rational>& q, const Weights& w);

}  // namespace vantage
