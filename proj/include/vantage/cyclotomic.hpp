#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vantage/rational.hpp"

namespace vantage {

/// Element of the cyclotomic field Q(zeta_N), stored as a polynomial in zeta
/// reduced modulo the N-th cyclotomic polynomial.
///
/// Only field operations and exact equality are offered; there is no real
/// embedding or sign. That is enough for counting arrangement regions, where
/// every predicate is an equality test. N == 0 marks a plain rational that
/// adopts the order of whatever it meets.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long value) : coeffs_{Rational(value)} { trim(); }
  Cyclotomic(const Rational& value) : coeffs_{value} { trim(); }

  /// zeta_N^k.
  static Cyclotomic zeta_power(int order, long k);
  /// cos(2 pi k / n) and sin(2 pi k / n), realized in Q(zeta_lcm(n,4)).
  static Cyclotomic cos_turn(int n, long k);
  static Cyclotomic sin_turn(int n, long k);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::string str() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
  friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
  friend Cyclotomic operator*(Cyclotomic x, const Cyclotomic& y) { return x *= y; }
  friend Cyclotomic operator/(Cyclotomic x, const Cyclotomic& y) { return x /= y; }
  friend Cyclotomic operator-(const Cyclotomic& x);
  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y);

  Cyclotomic inverse() const;

 private:
  int merged_order(const Cyclotomic& other) const;
  void trim();
  void reduce();

  int order_ = 0;
  std::vector<Rational> coeffs_;  // low degree first, no trailing zeros
};

/// Coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
/// Lexicographic on the reduced coefficient vector; total, consistent with ==.
int canonical_compare(const Cyclotomic& x, const Cyclotomic& y);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace vantage
