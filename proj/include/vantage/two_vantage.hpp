#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vantage/field.hpp"
#include "vantage/ordering.hpp"
#include "vantage/point_config.hpp"

namespace vantage {

/// Orders points by d(V1, P) + d(V2, P), exactly. Any dimension, rational coordinates.
Ordering ordering_two_vantage(const PointConfig& config, const PointConfig::Point& v1, const PointConfig::Point& v2);

template <std::size_t N>
Ordering ordering_two_vantage(const std::vector<std::array<Rational, N>>& points, const std::array<Rational, N>& v1,
                              const std::array<Rational, N>& v2);
Ordering ordering_two_vantage_1d(const std::vector<Rational>& points, const Rational& v1, const Rational& v2);

enum class TieKind { containment, midpoint, none };
std::string to_string(TieKind kind);

/// Why two points on a line tie for the sum of distances to V1, V2, if they do.
/// Containment: both lie in [V1, V2]. Midpoint: they straddle the segment and
/// share its midpoint.
TieKind classify_tie_1d(const Rational& pi, const Rational& pj, const Rational& v1, const Rational& v2);

/// The single vantage point (V1 + V2)/2 reproducing a tie-free two-vantage
/// ordering on the line. Throws std::invalid_argument if the ordering has ties.
Rational reduce_to_single_1d(const std::vector<Rational>& points, const Rational& v1, const Rational& v2);

/// Bit k is '1' iff the (k+2)-th listed point lies further along the line than the (k+1)-th.
/// `positions[i]` is the rank of point i+1 along the line (any strictly ordered key works).
std::string updown(const Ordering& o, const std::vector<int>& positions);
/// Same with points already indexed in line order.
std::string updown(const Ordering& o);
/// Interior runs (neither first nor last) may not include both a 0-run and a
/// 1-run of length >= 2.
bool is_velo_valid(const std::string& seq);
/// Every prefix of the ordering occupies a contiguous block of line positions.
bool contiguity_check(const Ordering& o, const std::vector<int>& positions);
bool contiguity_check(const Ordering& o);

/// Counts binary strings of a given length that pass is_velo_valid (brute force).
long long count_velo_valid(int length);

struct SamplerSpec {
  double grid_share = 0.05;    // V drawn from the coarse grid
  double refine_share = 0.35;  // V pair perturbed from a productive sample of the same block
  double min_radius = 0.002;   // log-uniform radius range, relative to the configuration extent
  double max_radius = 3.0;
  int grid_size = 48;
  std::uint64_t block_size = 1 << 13;
};

struct TwoVantageSample {
  /// Strict orderings (ranks, 1-based) with the first sample index that produced them.
  std::map<std::vector<int>, std::uint64_t> orderings;
  std::uint64_t samples = 0;
  std::uint64_t tie_samples = 0;
  std::uint64_t exact_fallbacks = 0;
};

/// Samples vantage pairs in the plane and collects the strict orderings seen.
/// Deterministic for (points, budget, seed, spec); independent of `jobs`; the
/// result for a budget is a subset of the result for any larger budget.
TwoVantageSample sample_two_vantage_orderings(const std::vector<Vec2<Rational>>& points, std::uint64_t budget,
                                              std::uint64_t seed, int jobs = 1, const SamplerSpec& spec = {});

/// Line positions (1-based ranks) of collinear planar points, or empty if not collinear.
std::vector<int> collinear_positions(const std::vector<Vec2<Rational>>& points);

}  // namespace vantage
