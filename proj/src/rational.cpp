#include "vantage/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "vantage/errors.hpp"

namespace vantage {

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite double");
  Rational r;
  mpq_set_d(r.value_.get_mpq_t(), value);
  return r;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  const auto slash = text.find('/');
  auto digits_ok = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
  };
  const std::size_t num_end = slash == std::string_view::npos ? text.size() : slash;
  if (!digits_ok(pos, num_end)) throw ParseError("malformed rational '" + std::string(text) + "'");
  BigInt num(std::string(text.substr(pos, num_end - pos)), 10);
  if (text[0] == '-') num = -num;
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    if (!digits_ok(slash + 1, text.size())) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    den = BigInt(std::string(text.substr(slash + 1)), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational square(const Rational& x) { return x * x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace vantage
