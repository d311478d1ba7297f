#include "vantage/line_arrangement.hpp"

#include <cmath>
#include <numeric>
#include <tuple>

#include "vantage/errors.hpp"
#include "vantage/formulas.hpp"

namespace vantage {

int lines_through_vertex(long long pairs) {
  // m(m-1)/2 = pairs
  const auto m = static_cast<long long>(std::llround((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(pairs))) / 2));
  if (m * (m - 1) / 2 != pairs) throw std::logic_error("vertex pair count is not triangular");
  return static_cast<int>(m);
}

namespace {

using I64 = std::int64_t;
constexpr I64 kSmallLimit = I64{1} << 15;

I64 gcd3(I64 a, I64 b, I64 c) { return std::gcd(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b), c < 0 ? -c : c); }

}  // namespace

long long fast_region_count(const std::vector<std::array<I64, 2>>& points) {
  using Key = std::array<I64, 3>;
  std::vector<Key> lines;
  const std::size_t n = points.size();
  lines.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& p = points[i];
      const auto& q = points[j];
      I64 a = 2 * (q[0] - p[0]);
      I64 b = 2 * (q[1] - p[1]);
      I64 c = q[0] * q[0] + q[1] * q[1] - p[0] * p[0] - p[1] * p[1];
      if (a == 0 && b == 0) throw std::invalid_argument("coincident points");
      const I64 g = gcd3(a, b, c);
      a /= g;
      b /= g;
      c /= g;
      if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
        c = -c;
      }
      lines.push_back({a, b, c});
    }
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  const auto count = static_cast<long long>(lines.size());
  if (count == 0) return 1;

  std::vector<std::array<I64, 2>> dirs;
  dirs.reserve(lines.size());
  for (const auto& l : lines) {
    const I64 g = std::gcd(l[0], l[1] < 0 ? -l[1] : l[1]);
    dirs.push_back({l[0] / g, l[1] / g});
  }
  std::sort(dirs.begin(), dirs.end());
  const bool one_direction = std::unique(dirs.begin(), dirs.end()) - dirs.begin() == 1;
  if (one_direction) return count + 1;

  std::vector<Key> hits;
  hits.reserve(lines.size() * (lines.size() - 1) / 2);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& l = lines[i];
      const auto& m = lines[j];
      I64 det = l[0] * m[1] - m[0] * l[1];
      if (det == 0) continue;
      I64 xn = l[2] * m[1] - m[2] * l[1];
      I64 yn = l[0] * m[2] - m[0] * l[2];
      if (det < 0) {
        det = -det;
        xn = -xn;
        yn = -yn;
      }
      const I64 g = gcd3(xn, yn, det);
      hits.push_back({xn / g, yn / g, det / g});
    }
  }
  std::sort(hits.begin(), hits.end());
  long long excess = 0;
  for (std::size_t k = 0; k < hits.size();) {
    std::size_t e = k + 1;
    while (e < hits.size() && hits[e] == hits[k]) ++e;
    excess += lines_through_vertex(static_cast<long long>(e - k)) - 1;
    k = e;
  }
  return 1 + count + excess;
}

bool to_small_integer_points(const std::vector<Vec2<Rational>>& points, std::vector<std::array<I64, 2>>& out) {
  BigInt den = 1;
  for (const auto& p : points) {
    for (const auto& x : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get().get_den_mpz_t());
  }
  out.clear();
  out.reserve(points.size());
  for (const auto& p : points) {
    std::array<I64, 2> q{};
    for (int k = 0; k < 2; ++k) {
      const BigInt v = p[k].numerator() * (den / p[k].denominator());
      if (!v.fits_slong_p() || v.get_si() >= kSmallLimit || v.get_si() <= -kSmallLimit) return false;
      q[k] = v.get_si();
    }
    out.push_back(q);
  }
  return true;
}

long long planar_region_count(const std::vector<Vec2<Rational>>& points) {
  std::vector<std::array<I64, 2>> small;
  if (to_small_integer_points(points, small)) return fast_region_count(small);
  return arrangement_of(points).regions_total;
}

PlanarSummary a_S(const PointConfig& config) {
  if (config.dimension() != 2) throw FieldMismatch("a_S needs a planar configuration");
  if (config.is_rational()) return strip_vertices(arrangement_of(config.rational_2d()));
  return strip_vertices(arrangement_of(config.quad_2d()));
}

bool verify_free(const PointConfig& config) {
  return BigInt(static_cast<long>(a_S(config).regions_total)) == max_orderings(static_cast<int>(config.size()), 2);
}

bool verify_free(const std::vector<Vec2<Rational>>& points) {
  if (points.empty()) return true;
  return BigInt(static_cast<long>(planar_region_count(points))) == max_orderings(static_cast<int>(points.size()), 2);
}

}  // namespace vantage
