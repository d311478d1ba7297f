#include "vantage/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vantage/errors.hpp"

namespace vantage {

namespace {

using Poly = std::vector<Rational>;

void trim_poly(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim_poly(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out = a;
  if (out.size() < b.size()) out.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim_poly(out);
  return out;
}

// Returns the quotient; `num` becomes the remainder.
Poly poly_divmod(Poly& num, const Poly& den) {
  if (den.empty()) throw std::domain_error("polynomial division by zero");
  Poly quot;
  if (num.size() >= den.size()) quot.resize(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  while (!num.empty() && num.size() >= den.size()) {
    const std::size_t shift = num.size() - den.size();
    const Rational factor = num.back() / lead;
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    trim_poly(num);
  }
  trim_poly(quot);
  return quot;
}

std::vector<long> int_poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic.
  std::vector<long> quot(num.size() - den.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const long factor = num[k + den.size() - 1];
    quot[k] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= factor * den[i];
  }
  for (long r : num) {
    if (r != 0) throw std::logic_error("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

Poly modulus_poly(int order) {
  const auto& phi = cyclotomic_polynomial(order);
  Poly out;
  out.reserve(phi.size());
  for (long c : phi) out.emplace_back(c);
  return out;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = int_poly_div_exact(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

void Cyclotomic::trim() { trim_poly(coeffs_); }

void Cyclotomic::reduce() {
  trim();
  if (order_ == 0) return;
  const Poly phi = modulus_poly(order_);
  if (coeffs_.size() >= phi.size()) poly_divmod(coeffs_, phi);
}

int Cyclotomic::merged_order(const Cyclotomic& other) const {
  if (order_ == 0) return other.order_;
  if (other.order_ == 0 || other.order_ == order_) return order_;
  throw FieldMismatch("cyclotomic orders " + std::to_string(order_) + " and " + std::to_string(other.order_) +
                      " do not match");
}

Cyclotomic Cyclotomic::zeta_power(int order, long k) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  long e = k % order;
  if (e < 0) e += order;
  Cyclotomic out;
  out.order_ = order;
  out.coeffs_.assign(static_cast<std::size_t>(e) + 1, Rational(0));
  out.coeffs_.back() = Rational(1);
  out.reduce();
  return out;
}

Cyclotomic Cyclotomic::cos_turn(int n, long k) {
  const int m = std::lcm(n, 4);
  const long j = k * (m / n);
  return (zeta_power(m, j) + zeta_power(m, -j)) * Cyclotomic(Rational(1, 2));
}

Cyclotomic Cyclotomic::sin_turn(int n, long k) {
  const int m = std::lcm(n, 4);
  const long j = k * (m / n);
  // 1/i = zeta^(3m/4).
  return (zeta_power(m, j) - zeta_power(m, -j)) * zeta_power(m, 3L * m / 4) * Cyclotomic(Rational(1, 2));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  order_ = merged_order(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  order_ = merged_order(other);
  coeffs_ = poly_sub(coeffs_, other.coeffs_);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  order_ = merged_order(other);
  coeffs_ = poly_mul(coeffs_, other.coeffs_);
  reduce();
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) {
  Cyclotomic inv = other.inverse();
  return *this *= inv;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic division by zero");
  Cyclotomic out;
  out.order_ = order_;
  if (coeffs_.size() == 1) {
    out.coeffs_ = {Rational(1) / coeffs_[0]};
    return out;
  }
  // Extended Euclid against the (irreducible) modulus.
  Poly r0 = modulus_poly(order_);
  Poly r1 = coeffs_;
  Poly s0;
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    Poly rem = r0;
    const Poly q = poly_divmod(rem, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::logic_error("cyclotomic modulus is not irreducible");
  const Rational scale = Rational(1) / r0[0];
  for (auto& c : s0) c *= scale;
  out.coeffs_ = std::move(s0);
  out.reduce();
  return out;
}

Cyclotomic operator-(const Cyclotomic& x) {
  Cyclotomic out = x;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
  x.merged_order(y);
  return x.coeffs_ == y.coeffs_;
}

int canonical_compare(const Cyclotomic& x, const Cyclotomic& y) {
  const auto& a = x.coefficients();
  const auto& b = y.coefficients();
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational ai = i < a.size() ? a[i] : Rational(0);
    const Rational bi = i < b.size() ? b[i] : Rational(0);
    const int c = canonical_compare(ai, bi);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i];
    if (i > 0) os << "*z" << order_ << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.str(); }

}  // namespace vantage
