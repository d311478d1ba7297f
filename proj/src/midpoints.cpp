#include "vantage/midpoints.hpp"

#include <algorithm>
#include <stdexcept>

namespace vantage {

long long distinct_midpoints_1d(const std::vector<Rational>& points) {
  std::vector<mpq_class> sums;
  sums.reserve(points.size() * points.size() / 2);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw std::invalid_argument("repeated point on the line");
      sums.push_back(points[i].get() + points[j].get());
    }
  }
  std::sort(sums.begin(), sums.end());
  return std::unique(sums.begin(), sums.end()) - sums.begin();
}

long long distinct_pairwise_sums(const std::vector<BigInt>& values) {
  std::vector<BigInt> sums;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) throw std::invalid_argument("repeated element in sum set");
      sums.push_back(values[i] + values[j]);
    }
  }
  std::sort(sums.begin(), sums.end());
  return std::unique(sums.begin(), sums.end()) - sums.begin();
}

long long distinct_pairwise_sums(const std::vector<long>& values) {
  std::vector<BigInt> big(values.begin(), values.end());
  return distinct_pairwise_sums(big);
}

bool equally_spaced(std::vector<Rational> points) {
  std::sort(points.begin(), points.end());
  for (std::size_t i = 2; i < points.size(); ++i) {
    if (points[i] - points[i - 1] != points[1] - points[0]) return false;
  }
  return true;
}

}  // namespace vantage
