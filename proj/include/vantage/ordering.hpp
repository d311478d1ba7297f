#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "vantage/field.hpp"
#include "vantage/point_config.hpp"

namespace vantage {

/// Points listed nearest first, as consecutive blocks of equal distance.
/// Indices are 1-based. A strict ordering has only singleton blocks.
struct Ordering {
  std::vector<std::vector<int>> blocks;

  std::vector<int> ranks() const;
  bool is_strict() const;
  std::size_t size() const;
  /// "1 3 2", with tie blocks bracketed: "[1 2] 3".
  std::string str() const;
  static Ordering parse(const std::string& text);
  static Ordering strict(const std::vector<int>& ranks);

  friend bool operator==(const Ordering&, const Ordering&) = default;
  friend auto operator<=>(const Ordering&, const Ordering&) = default;
};

/// Orders indices 0..n-1 by a three-way comparator (negative = nearer).
/// Equal items land in one block, listed by index.
template <class Cmp>
Ordering ordering_by(std::size_t n, Cmp cmp) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return cmp(i, j) < 0; });
  Ordering out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k == 0 || cmp(idx[k - 1], idx[k]) != 0) out.blocks.emplace_back();
    out.blocks.back().push_back(idx[k] + 1);
  }
  for (auto& b : out.blocks) std::sort(b.begin(), b.end());
  return out;
}

template <class F, std::size_t N>
Ordering ordering_from_vantage(const std::vector<std::array<F, N>>& points, const std::array<F, N>& vantage) {
  std::vector<F> d2;
  d2.reserve(points.size());
  for (const auto& p : points) d2.push_back(squared_norm(p - vantage));
  return ordering_by(points.size(), [&](int i, int j) {
    const auto c = d2[i] <=> d2[j];
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  });
}

template <class F>
Ordering ordering_from_vantage(const std::vector<F>& points, const F& vantage) {
  std::vector<F> d2;
  d2.reserve(points.size());
  for (const auto& p : points) d2.push_back((p - vantage) * (p - vantage));
  return ordering_by(points.size(), [&](int i, int j) {
    const auto c = d2[i] <=> d2[j];
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  });
}

/// Vantage given as a point of the configuration's space.
Ordering ordering_from_vantage(const PointConfig& config, const PointConfig::Point& vantage);

}  // namespace vantage
