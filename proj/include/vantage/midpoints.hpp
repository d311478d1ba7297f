#pragma once

#include <vector>

#include "vantage/rational.hpp"

namespace vantage {

/// Number of distinct midpoints (a_i + a_j)/2, i < j. One vantage point on
/// the line sees this many plus one strict orderings.
long long distinct_midpoints_1d(const std::vector<Rational>& points);

/// |{a_i + a_j : i < j}|.
long long distinct_pairwise_sums(const std::vector<BigInt>& values);
long long distinct_pairwise_sums(const std::vector<long>& values);

/// True iff consecutive gaps of the sorted points are all equal.
bool equally_spaced(std::vector<Rational> points);

}  // namespace vantage
