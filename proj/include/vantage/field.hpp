#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "vantage/cyclotomic.hpp"
#include "vantage/quadext.hpp"
#include "vantage/rational.hpp"

namespace vantage {

// Scalar types usable by the arrangement code: a field with exact equality
// and some total order for deduplication (not necessarily the real order).
template <class F>
concept ExactField = requires(const F& x, const F& y) {
  { x + y } -> std::convertible_to<F>;
  { x - y } -> std::convertible_to<F>;
  { x * y } -> std::convertible_to<F>;
  { x / y } -> std::convertible_to<F>;
  { x == y } -> std::convertible_to<bool>;
  { is_zero(x) } -> std::convertible_to<bool>;
  { canonical_compare(x, y) } -> std::convertible_to<int>;
};

// Fields that also carry the real order.
template <class F>
concept OrderedField = ExactField<F> && requires(const F& x, const F& y) {
  { x < y } -> std::convertible_to<bool>;
};

template <class F>
using Vec2 = std::array<F, 2>;
template <class F>
using Vec3 = std::array<F, 3>;

template <class F, std::size_t N>
std::array<F, N> operator-(const std::array<F, N>& u, const std::array<F, N>& v) {
  std::array<F, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = u[i] - v[i];
  return out;
}

template <class F, std::size_t N>
std::array<F, N> operator+(const std::array<F, N>& u, const std::array<F, N>& v) {
  std::array<F, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = u[i] + v[i];
  return out;
}

template <class F, std::size_t N>
std::array<F, N> scaled(const std::array<F, N>& u, const F& s) {
  std::array<F, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = u[i] * s;
  return out;
}

template <class F, std::size_t N>
F dot(const std::array<F, N>& u, const std::array<F, N>& v) {
  F out(0);
  for (std::size_t i = 0; i < N; ++i) out += u[i] * v[i];
  return out;
}

template <class F, std::size_t N>
F squared_norm(const std::array<F, N>& u) {
  return dot(u, u);
}

template <class F>
Vec3<F> cross(const Vec3<F>& u, const Vec3<F>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

template <class F>
F determinant3(const Vec3<F>& a, const Vec3<F>& b, const Vec3<F>& c) {
  return dot(a, cross(b, c));
}

template <class F, std::size_t N>
bool is_zero_vec(const std::array<F, N>& u) {
  return std::all_of(u.begin(), u.end(), [](const F& x) { return is_zero(x); });
}

// Divides by the first non-zero entry, so the result is the same for every
// non-zero multiple of u (a projective canonical form).
template <class F, std::size_t N>
std::array<F, N> projective_canonical(std::array<F, N> u) {
  for (std::size_t i = 0; i < N; ++i) {
    if (!is_zero(u[i])) {
      const F lead = u[i];
      for (std::size_t j = i; j < N; ++j) u[j] = u[j] / lead;
      return u;
    }
  }
  return u;
}

template <class F, std::size_t N>
int canonical_compare(const std::array<F, N>& u, const std::array<F, N>& v) {
  for (std::size_t i = 0; i < N; ++i) {
    const int c = canonical_compare(u[i], v[i]);
    if (c != 0) return c;
  }
  return 0;
}

struct CanonicalLess {
  template <class T>
  bool operator()(const T& a, const T& b) const {
    return canonical_compare(a, b) < 0;
  }
};

}  // namespace vantage
