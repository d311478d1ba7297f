#pragma once

#include "vantage/rational.hpp"

namespace vantage {

/// Sign of f + g*sqrt(p) for rationals f, g and p >= 0.
int sign_plus_sqrt(const Rational& f, const Rational& g, const Rational& p);

/// Sign of (sqrt(a) + sqrt(b)) - (sqrt(c) + sqrt(d)) for non-negative rationals.
/// Exact; squares twice and tracks signs so no step loses information.
int cmp_sqrt_sum(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

}  // namespace vantage
