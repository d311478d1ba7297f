#include "vantage/quadext.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "vantage/errors.hpp"

namespace vantage {

bool is_square_free(long value) {
  if (value < 2) return false;
  for (long p = 2; p * p <= value; ++p) {
    if (value % (p * p) == 0) return false;
  }
  return true;
}

QuadExt::QuadExt(Rational a, Rational b, long radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(radicand) {
  if (radicand_ != 0 && !is_square_free(radicand_)) {
    throw std::invalid_argument("radicand " + std::to_string(radicand_) + " is not a square-free integer > 1");
  }
  if (radicand_ == 0 && !b_.is_zero()) {
    throw std::invalid_argument("radical part without a radicand");
  }
}

long QuadExt::merged_radicand(const QuadExt& other) const {
  if (radicand_ == 0) return other.radicand_;
  if (other.radicand_ == 0 || other.radicand_ == radicand_) return radicand_;
  throw FieldMismatch("mixed radicands sqrt(" + std::to_string(radicand_) + ") and sqrt(" +
                      std::to_string(other.radicand_) + ")");
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(radicand_); }

double QuadExt::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(radicand_));
}

QuadExt& QuadExt::operator+=(const QuadExt& other) {
  radicand_ = merged_radicand(other);
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& other) {
  radicand_ = merged_radicand(other);
  a_ -= other.a_;
  b_ -= other.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& other) {
  radicand_ = merged_radicand(other);
  if (is_rational() && other.is_rational()) {
    a_ *= other.a_;
    return *this;
  }
  Rational a = a_ * other.a_ + b_ * other.b_ * Rational(radicand_);
  Rational b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& other) {
  radicand_ = merged_radicand(other);
  if (other.is_rational()) {
    a_ /= other.a_;
    b_ /= other.a_;
    return *this;
  }
  // Multiply through by the conjugate; the norm is non-zero since D is not a square.
  const Rational n = other.norm();
  *this *= other.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
  const int s = sign_quad(x - y);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int sign_quad(const QuadExt& x) {
  const int sa = x.rational_part().sign();
  const int sb = x.radical_part().sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: whichever of a^2 and b^2 D is larger wins.
  const Rational lhs = square(x.rational_part());
  const Rational rhs = square(x.radical_part()) * Rational(x.radicand());
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

int canonical_compare(const QuadExt& x, const QuadExt& y) {
  const int c = canonical_compare(x.rational_part(), y.rational_part());
  if (c != 0) return c;
  return canonical_compare(x.radical_part(), y.radical_part());
}

std::string QuadExt::str() const {
  if (is_rational()) return a_.str();
  std::string out = a_.str();
  out += b_.sign() < 0 ? "-" : "+";
  out += abs(b_).str();
  out += "√";
  out += std::to_string(radicand_);
  return out;
}

QuadExt QuadExt::parse(std::string_view text) {
  static constexpr std::string_view kRoot = "√";
  std::size_t root = text.find(kRoot);
  std::size_t root_len = kRoot.size();
  if (root == std::string_view::npos) {
    root = text.find("sqrt");
    root_len = 4;
  }
  if (root == std::string_view::npos) return QuadExt(Rational::parse(text));

  // The split between a and b is the first sign after position 0.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < root; ++i) {
    if (text[i] == '+' || text[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) throw ParseError("malformed quadratic scalar '" + std::string(text) + "'");
  const Rational a = Rational::parse(text.substr(0, split));
  std::string_view b_text = text.substr(split, root - split);
  if (!b_text.empty() && b_text[0] == '+') b_text.remove_prefix(1);
  const Rational b = Rational::parse(b_text);
  const std::string_view d_text = text.substr(root + root_len);
  if (d_text.empty()) throw ParseError("missing radicand in '" + std::string(text) + "'");
  long radicand = 0;
  try {
    std::size_t used = 0;
    radicand = std::stol(std::string(d_text), &used);
    if (used != d_text.size()) throw ParseError("malformed radicand");
  } catch (const std::logic_error&) {
    throw ParseError("malformed radicand in '" + std::string(text) + "'");
  }
  if (!is_square_free(radicand)) throw ParseError("radicand must be square-free and > 1");
  if (b.is_zero()) return QuadExt(a);
  return QuadExt(a, b, radicand);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

}  // namespace vantage
