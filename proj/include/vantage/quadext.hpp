#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "vantage/rational.hpp"

namespace vantage {

/// An element a + b*sqrt(D) of a real quadratic field.
///
/// A radicand of 0 marks a plain rational that has not yet met a radical; it
/// adopts the radicand of whatever it is combined with. Combining two
/// different non-zero radicands throws FieldMismatch.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long value) : a_(value) {}
  QuadExt(Rational a) : a_(std::move(a)) {}
  QuadExt(Rational a, Rational b, long radicand);

  /// sqrt(D) itself.
  static QuadExt root(long radicand) { return QuadExt(Rational(0), Rational(1), radicand); }
  /// Accepts "a", "a+b√D", "a-b√D" (also "sqrtD" in place of "√D").
  static QuadExt parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  long radicand() const { return radicand_; }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt conjugate() const { return QuadExt(a_, -b_, radicand_); }
  /// a^2 - b^2 D, the field norm.
  Rational norm() const;
  double to_double() const;
  std::string str() const;

  QuadExt& operator+=(const QuadExt& other);
  QuadExt& operator-=(const QuadExt& other);
  QuadExt& operator*=(const QuadExt& other);
  QuadExt& operator/=(const QuadExt& other);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.radicand_); }

  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  /// Orders by real value.
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

 private:
  long merged_radicand(const QuadExt& other) const;

  Rational a_;
  Rational b_;
  long radicand_ = 0;
};

/// Exact sign of the real number a + b*sqrt(D).
int sign_quad(const QuadExt& x);

bool is_square_free(long value);

inline bool is_zero(const QuadExt& x) { return x.rational_part().is_zero() && x.is_rational(); }
/// Lexicographic on (a, b); a total order consistent with equality.
int canonical_compare(const QuadExt& x, const QuadExt& y);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace vantage
