#pragma once

#include <string>
#include <vector>

#include "vantage/rational.hpp"

namespace vantage {

/// Unsigned Stirling numbers of the first kind; 0 outside 1 <= k <= n
/// (except s(0,0) = 1).
BigInt stirling1(int n, int k);
/// F_1 = F_2 = 1.
BigInt fibonacci(int k);
BigInt binomial(long n, long k);
BigInt factorial(int n);

/// Maximum number of single-vantage orderings of n points in R^d.
BigInt max_orderings(int n, int d);
/// Minimum; the same 2n-2 in every dimension.
BigInt min_orderings(int n);

/// The same planar maximum via the quartic closed form.
BigInt max_orderings_plane_poly(int n);
/// Quartic for d = 1 and sextic for d = 3 (identities, not used by the library).
BigInt max_orderings_line_poly(int n);
BigInt max_orderings_space_poly(int n);

/// Extra regions created when free sets of sizes s and t are merged freely.
BigInt free_sum_increment(long s, long t);
/// Generalized trapezoid with k parallel pairs over 2k points.
BigInt trapezoid_count(int k);

/// m free points plus k*l points on l parallel lines (k per line), n = m + k*l.
BigInt parallel_gadget_poly(long m, long k, long l);
/// M(n) - l*s(k,k-2): the difference form that agrees with the polynomial.
BigInt parallel_gadget_deficit_form(long m, long k, long l);
/// M(n) - k*s(k,k-2): the variant that only agrees when k == l or k == 2.
BigInt parallel_gadget_k_form(long m, long k, long l);

/// k points on a circle with distinct bisectors, n-k free points.
BigInt circle_gadget_count(int n, int k);
BigInt circle_gadget_poly(int n, int k);

BigInt sphere_max(int n);
BigInt sphere_min(int n);
/// Free hemisphere set of n points together with its antipodes.
BigInt sphere_doubled_count(int n);
struct DoubledCensus {
  BigInt v4, v6, v8;
};
DoubledCensus doubled_census(int n);

/// Regions of k lines in general position.
BigInt line_regions(const BigInt& k);
/// M(n,2) / L(C(n,2)) in double precision.
double ratio_to_free(int n);

/// c_n = 2(F_{n+2} - n).
BigInt velo_bound(int n);
BigInt two_vantage_line_bound(int n);  // 2^(n-1)

/// Checked exact division: throws std::logic_error on a non-zero remainder.
BigInt exact_div(const BigInt& num, long den);

/// Names accepted by formula_by_name, with their arity.
struct FormulaInfo {
  std::string name;
  int arity;
  std::string usage;
};
const std::vector<FormulaInfo>& formula_catalog();
BigInt formula_by_name(const std::string& name, const std::vector<long>& args);

}  // namespace vantage
