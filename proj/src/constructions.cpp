#include "vantage/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "vantage/errors.hpp"
#include "vantage/formulas.hpp"
#include "vantage/line_arrangement.hpp"
#include "vantage/midpoints.hpp"
#include "vantage/random.hpp"
#include "vantage/sphere.hpp"

namespace vantage {

namespace {

constexpr std::int64_t kBox = 4096;

long long count_of(const Planar& pts) { return planar_region_count(pts); }

bool distinct(const Planar& pts) {
  std::vector<Vec2<Rational>> copy = pts;
  std::sort(copy.begin(), copy.end(), CanonicalLess{});
  return std::adjacent_find(copy.begin(), copy.end(), [](const auto& a, const auto& b) {
           return canonical_compare(a, b) == 0;
         }) == copy.end();
}

template <class T>
bool distinct3(std::vector<Vec3<T>> pts) {
  std::sort(pts.begin(), pts.end(), CanonicalLess{});
  return std::adjacent_find(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
           return canonical_compare(a, b) == 0;
         }) == pts.end();
}

Vec2<Rational> random_int_point(Rng& rng, std::int64_t box) {
  return {Rational(static_cast<long>(rng.uniform_int(-box, box))), Rational(static_cast<long>(rng.uniform_int(-box, box)))};
}

// Non-zero rational with a small denominator, used for parallel offsets.
Rational random_step(Rng& rng) {
  std::int64_t p = 0;
  while (p == 0) p = rng.uniform_int(-40, 40);
  return Rational(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(rng.uniform_int(1, 8))));
}

long long max_count(int n) { return max_orderings(n, 2).get_si(); }

[[noreturn]] void exhausted(const std::string& what, int attempts) {
  throw BudgetExhausted(what + ": no valid configuration in " + std::to_string(attempts) + " attempts");
}

}  // namespace

std::vector<Rational> equally_spaced_line(int n) {
  if (n < 1) throw std::invalid_argument("equally_spaced_line needs n >= 1");
  std::vector<Rational> out;
  for (int i = 1; i <= n; ++i) out.emplace_back(i);
  return out;
}

Planar on_x_axis(const std::vector<Rational>& xs) {
  Planar out;
  for (const auto& x : xs) out.push_back({x, Rational(0)});
  return out;
}

std::vector<Rational> gap_config_1d(int n, long k) {
  if (n < 1) throw std::invalid_argument("gap_config_1d needs n >= 1");
  if (n == 1) {
    if (k != 1) throw std::invalid_argument("one point gives exactly one ordering");
    return {Rational(1)};
  }
  const long lo = 2L * n - 2;
  const long hi = (static_cast<long>(n) * n - n + 2) / 2;
  if (k < lo || k > hi) {
    throw std::invalid_argument("k=" + std::to_string(k) + " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "] for n=" + std::to_string(n));
  }
  std::vector<BigInt> values;
  if (k == lo) {
    for (int i = 1; i <= n; ++i) values.emplace_back(i);
  } else if (k == hi) {
    for (int i = 0; i < n; ++i) values.push_back(BigInt(1) << i);
  } else {
    // Round m: 1..n-m, then (n-m+1)+t, then 2^(n-m+2)..2^n.
    for (int m = 1; m + 2 < n && values.empty(); ++m) {
      const long base = static_cast<long>(m + 1) * n - (static_cast<long>(m) * m + 3L * m - 2) / 2;
      const long t = k - base + 1;
      if (t < 1 || t > n - m - 2) continue;
      for (int i = 1; i <= n - m; ++i) values.emplace_back(i);
      values.emplace_back(n - m + 1 + t);
      for (int e = n - m + 2; e <= n; ++e) values.push_back(BigInt(1) << e);
    }
  }
  if (values.empty()) throw std::logic_error("no gap round covers k=" + std::to_string(k));
  std::vector<Rational> out;
  for (const auto& v : values) out.emplace_back(v);
  if (distinct_midpoints_1d(out) + 1 != k) throw std::logic_error("gap construction missed its target");
  return out;
}

Planar free_config(int n, std::uint64_t seed, int attempts) {
  if (n < 1) throw std::invalid_argument("free_config needs n >= 1");
  const long long target = max_count(n);
  for (int a = 0; a < attempts; ++a) {
    Rng rng(seed, static_cast<std::uint64_t>(a));
    Planar pts;
    for (int i = 0; i < n; ++i) pts.push_back(random_int_point(rng, kBox));
    if (distinct(pts) && count_of(pts) == target) return pts;
  }
  exhausted("free_config", attempts);
}

Spherical free_sphere_config(int n, std::uint64_t seed, bool hemisphere, int attempts) {
  if (n < 1) throw std::invalid_argument("free_sphere_config needs n >= 1");
  const long long target = sphere_max(n).get_si();
  constexpr std::int64_t den = 997;
  for (int a = 0; a < attempts; ++a) {
    Rng rng(seed, static_cast<std::uint64_t>(a));
    Spherical pts;
    while (static_cast<int>(pts.size()) < n) {
      const std::int64_t bound = hemisphere ? den : 3 * den;
      const std::int64_t u = rng.uniform_int(-bound, bound);
      const std::int64_t v = rng.uniform_int(-bound, bound);
      if (hemisphere && u * u + v * v >= den * den) continue;
      pts.push_back(inverse_stereographic(Rational(BigInt(static_cast<long>(u)), BigInt(den)),
                                          Rational(BigInt(static_cast<long>(v)), BigInt(den))));
    }
    if (distinct3(pts) && sphere_arrangement_of(pts).regions_total == target) return pts;
  }
  exhausted("free_sphere_config", attempts);
}

Planar rotate_rational(const Planar& pts, long a, long b) {
  const BigInt h = BigInt(a) * a + BigInt(b) * b;
  if (h == 0) throw std::invalid_argument("degenerate rotation");
  const Rational c(BigInt(a) * a - BigInt(b) * b, h);
  const Rational s(2 * BigInt(a) * b, h);
  Planar out;
  for (const auto& p : pts) out.push_back({c * p[0] - s * p[1], s * p[0] + c * p[1]});
  return out;
}

Planar translate(const Planar& pts, const Vec2<Rational>& offset) {
  Planar out;
  for (const auto& p : pts) out.push_back(p + offset);
  return out;
}

Planar free_sum_to(const Planar& s, const Planar& t, long long target, std::uint64_t seed, int attempts) {
  if (t.empty()) {
    if (count_of(s) == target) return s;
    exhausted("free_sum", 1);
  }
  if (s.empty()) {
    if (count_of(t) == target) return t;
    exhausted("free_sum", 1);
  }
  for (int a = 0; a < attempts; ++a) {
    Rng rng(seed, static_cast<std::uint64_t>(a));
    const long ra = static_cast<long>(rng.uniform_int(1, 12));
    const long rb = static_cast<long>(rng.uniform_int(0, 12));
    Planar moved = rotate_rational(t, ra, rb);
    moved = translate(moved, random_int_point(rng, 2 * kBox));
    Planar merged = s;
    merged.insert(merged.end(), moved.begin(), moved.end());
    if (distinct(merged) && count_of(merged) == target) return merged;
  }
  exhausted("free_sum", attempts);
}

Planar free_sum(const Planar& s, const Planar& t, std::uint64_t seed, int attempts) {
  if (s.empty() || t.empty()) throw std::invalid_argument("free_sum needs non-empty parts");
  const BigInt target = BigInt(static_cast<long>(count_of(s))) + BigInt(static_cast<long>(count_of(t))) +
                        free_sum_increment(static_cast<long>(s.size()), static_cast<long>(t.size()));
  return free_sum_to(s, t, target.get_si(), seed, attempts);
}

Planar trapezoid_gadget(int k, std::uint64_t seed, int attempts) {
  if (k < 2) throw std::invalid_argument("trapezoid_gadget needs k >= 2");
  const long long target = trapezoid_count(k).get_si();
  for (int a = 0; a < attempts; ++a) {
    Rng rng(seed, static_cast<std::uint64_t>(a));
    Planar p(2 * k);
    p[0] = random_int_point(rng, kBox / 8);
    p[1] = random_int_point(rng, kBox / 8);
    for (int j = 2; j <= k; ++j) {
      p[2 * j - 2] = random_int_point(rng, kBox / 8);
      const Vec2<Rational> dir = p[j - 1] - p[0];
      p[2 * j - 1] = p[2 * j - 2] + scaled(dir, random_step(rng));
    }
    if (distinct(p) && count_of(p) == target) return p;
  }
  exhausted("trapezoid_gadget", attempts);
}

Planar parallel_chain_gadget(int pairs, std::uint64_t seed, int attempts) {
  if (pairs < 0) throw std::invalid_argument("parallel_chain_gadget needs pairs >= 0");
  const int n = pairs + 3;
  const long long target = max_count(n) - pairs;
  for (int a = 0; a < attempts; ++a) {
    Rng rng(seed, static_cast<std::uint64_t>(a));
    Planar p;
    for (int i = 0; i < 3; ++i) p.push_back(random_int_point(rng, kBox / 8));
    for (int d = 4; d <= n; ++d) {
      const Vec2<Rational> dir = p[d - 3] - p[0];
      p.push_back(p[d - 2] + scaled(dir, random_step(rng)));
    }
    if (distinct(p) && count_of(p) == target) return p;
  }
  exhausted("parallel_chain_gadget", attempts);
}

Planar near_max_config(int n, int k, std::uint64_t seed, int attempts) {
  if (k < 0 || 2 * k > n) throw std::invalid_argument("near_max_config needs 0 <= k <= n/2");
  if (k == 0) return free_config(n, seed, attempts);
  if (n < 4) throw std::invalid_argument("near_max_config needs n >= 4 when k > 0");
  const long long target = max_count(n) - k;
  if (n == 4 && k == 2) {
    for (int a = 0; a < attempts; ++a) {
      Rng rng(seed, static_cast<std::uint64_t>(a));
      Planar p;
      for (int i = 0; i < 3; ++i) p.push_back(random_int_point(rng, kBox / 8));
      p.push_back(p[0] + p[2] - p[1]);
      if (distinct(p) && count_of(p) == target) return p;
    }
    exhausted("parallelogram", attempts);
  }
  Planar gadget;
  if (2 * k + 2 <= n) {
    gadget = trapezoid_gadget(k + 1, seed, attempts);
  } else {
    gadget = parallel_chain_gadget(k, seed, attempts);
  }
  const int rest = n - static_cast<int>(gadget.size());
  if (rest == 0) return gadget;
  return free_sum_to(gadget, free_config(rest, seed + 1, attempts), target, seed + 2, attempts);
}

Planar parallel_lines_gadget(int m, int k, int l, std::uint64_t seed, int attempts) {
  if (m < 0 || k < 2 || l < 1) throw std::invalid_argument("parallel_lines_gadget needs m >= 0, k >= 2, l >= 1");
  const long long target = parallel_gadget_poly(m, k, l).get_si();
  for (int a = 0; a < attempts; ++a) {
    Rng rng(seed, static_cast<std::uint64_t>(a));
    Planar p;
    for (int line = 0; line < l; ++line) {
      // Lines are pairwise non-parallel; the count check rejects accidental coincidences.
      Vec2<Rational> dir;
      do {
        dir = random_int_point(rng, 30);
      } while (dir[0].is_zero() && dir[1].is_zero());
      const Vec2<Rational> base = random_int_point(rng, kBox / 8);
      for (int i = 0; i < k; ++i) p.push_back(base + scaled(dir, random_step(rng)));
    }
    for (int i = 0; i < m; ++i) p.push_back(random_int_point(rng, kBox / 8));
    if (distinct(p) && count_of(p) == target) return p;
  }
  exhausted("parallel_lines_gadget", attempts);
}

Planar circle_gadget(int n, int k, std::uint64_t seed, int attempts) {
  if (k < 2 || k > n) throw std::invalid_argument("circle_gadget needs 2 <= k <= n");
  const long long target = circle_gadget_count(n, k).get_si();
  for (int a = 0; a < attempts; ++a) {
    Rng rng(seed, static_cast<std::uint64_t>(a));
    const Vec2<Rational> centre = random_int_point(rng, 200);
    const Rational radius(static_cast<long>(rng.uniform_int(50, 400)));
    Planar p;
    for (int i = 0; i < k; ++i) {
      // Rational point of the unit circle from a rational slope s.
      const Rational s(BigInt(static_cast<long>(rng.uniform_int(-60, 60))), BigInt(static_cast<long>(rng.uniform_int(1, 12))));
      const Rational h = Rational(1) + s * s;
      p.push_back({centre[0] + radius * (Rational(1) - s * s) / h, centre[1] + radius * Rational(2) * s / h});
    }
    for (int i = k; i < n; ++i) p.push_back(random_int_point(rng, 600));
    if (distinct(p) && count_of(p) == target) return p;
  }
  exhausted("circle_gadget", attempts);
}

Planar grid_lines(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("grid_lines needs k, l >= 1");
  Planar out;
  for (int j = 1; j <= l; ++j) {
    for (int i = 1; i <= k; ++i) out.push_back({Rational(i), Rational(j)});
  }
  return out;
}

Planar concyclic_from_exponents(const std::vector<long>& exponents) {
  // Powers of w = (3 + 4i)/5 by binary exponentiation in Q(i).
  auto mul = [](const Vec2<Rational>& x, const Vec2<Rational>& y) {
    return Vec2<Rational>{x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
  };
  Planar out;
  for (long e : exponents) {
    Vec2<Rational> base{Rational(3, 5), Rational(e < 0 ? -4 : 4, 5)};
    unsigned long r = static_cast<unsigned long>(e < 0 ? -e : e);
    Vec2<Rational> acc{Rational(1), Rational(0)};
    while (r) {
      if (r & 1) acc = mul(acc, base);
      base = mul(base, base);
      r >>= 1;
    }
    out.push_back(acc);
  }
  if (!distinct(out)) throw std::invalid_argument("repeated exponent");
  return out;
}

std::vector<Vec2<Cyclotomic>> cyclotomic_circle_points(int order, const std::vector<long>& steps) {
  std::vector<Vec2<Cyclotomic>> out;
  for (long a : steps) out.push_back({Cyclotomic::cos_turn(order, a), Cyclotomic::sin_turn(order, a)});
  return out;
}

std::vector<Vec2<Cyclotomic>> regular_polygon_cyclotomic(int n) {
  if (n < 2) throw std::invalid_argument("regular polygon needs n >= 2");
  std::vector<long> steps(n);
  for (int i = 0; i < n; ++i) steps[i] = i;
  return cyclotomic_circle_points(n, steps);
}

bool concyclic_equal_supported(int n) { return n == 2 || n == 3 || n == 4 || n == 6 || n == 8 || n == 12; }

PointConfig concyclic_equal(int n) {
  if (!concyclic_equal_supported(n)) {
    throw std::invalid_argument("regular " + std::to_string(n) +
                                "-gon is not exact over a quadratic field; supported n: 2, 3, 4, 6, 8, 12");
  }
  // cos and sin of 2 pi k / n in Q(sqrt3) or Q(sqrt2).
  const long d = (n == 8) ? 2 : 3;
  const QuadExt half(Rational(1, 2));
  const QuadExt r(Rational(0), Rational(1, 2), d);  // sqrt(d)/2
  std::vector<PointConfig::Point> pts;
  for (int k = 0; k < n; ++k) {
    const int deg = 360 * k / n;
    QuadExt c, s;
    auto set = [&](const QuadExt& cc, const QuadExt& ss) {
      c = cc;
      s = ss;
    };
    switch (deg % 90) {
      case 0: {
        const int q = deg / 90;
        const long cs[] = {1, 0, -1, 0};
        const long sn[] = {0, 1, 0, -1};
        set(QuadExt(cs[q]), QuadExt(sn[q]));
        break;
      }
      case 30:
      case 60:
      case 45: {
        // First-quadrant values, then reflect.
        const int base = deg % 90;
        QuadExt c0, s0;
        if (base == 30) {
          c0 = r;
          s0 = half;
        } else if (base == 60) {
          c0 = half;
          s0 = r;
        } else {
          c0 = r;
          s0 = r;
        }
        switch (deg / 90) {
          case 0: set(c0, s0); break;
          case 1: set(-s0, c0); break;
          case 2: set(-c0, -s0); break;
          default: set(s0, -c0); break;
        }
        break;
      }
      default:
        throw std::logic_error("unexpected angle");
    }
    pts.push_back({c, s});
  }
  long radicand = 0;
  for (const auto& p : pts) {
    for (const auto& x : p) {
      if (!x.is_rational()) radicand = x.radicand();
    }
  }
  return PointConfig(2, std::move(pts), false, radicand);
}

std::vector<Vec2<Cyclotomic>> concyclic_with_bisectors(int m, long t) {
  if (m < 2) throw std::invalid_argument("concyclic_with_bisectors needs m >= 2");
  const long most = static_cast<long>(m) * (m - 1) / 2;
  const long least = m == 2 ? 1 : (m == 3 ? 3 : m);
  if (t < least || t > most) {
    throw std::invalid_argument("t=" + std::to_string(t) + " outside [" + std::to_string(least) + ", " +
                                std::to_string(most) + "] for " + std::to_string(m) + " concyclic points");
  }
  if (t >= 2L * m - 3) {
    std::vector<long> exps;
    for (const auto& a : gap_config_1d(m, t + 1)) exps.push_back(a.numerator().get_si());
    return to_cyclotomic(concyclic_from_exponents(exps));
  }
  // Angles 0..m-1 of a regular t-gon: sums 1..2m-3 hit every residue mod t.
  std::vector<long> steps(m);
  for (int i = 0; i < m; ++i) steps[i] = i;
  return cyclotomic_circle_points(static_cast<int>(t), steps);
}

std::vector<Vec3<Cyclotomic>> concyclic_plus_one(int n, long t, std::uint64_t seed, int attempts) {
  if (n < 5) throw std::invalid_argument("concyclic_plus_one needs n >= 5");
  const auto base = lift_circle_to_sphere(concyclic_with_bisectors(n - 1, t));
  const long long target = 2LL * n * t;
  for (int a = 0; a < attempts; ++a) {
    Rng rng(seed, static_cast<std::uint64_t>(a));
    const Rational u(BigInt(static_cast<long>(rng.uniform_int(-3000, 3000))), BigInt(997));
    const Rational v(BigInt(static_cast<long>(rng.uniform_int(-3000, 3000))), BigInt(997));
    const Vec3<Rational> extra = inverse_stereographic(u, v);
    auto pts = base;
    pts.push_back({Cyclotomic(extra[0]), Cyclotomic(extra[1]), Cyclotomic(extra[2])});
    if (distinct3(pts) && sphere_arrangement_of(pts).regions_total == target) return pts;
  }
  exhausted("concyclic_plus_one", attempts);
}

const std::vector<std::string>& platonic_names() {
  static const std::vector<std::string> names = {"tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"};
  return names;
}

PointConfig platonic(const std::string& name) {
  using P = PointConfig::Point;
  std::vector<P> pts;
  long radicand = 0;
  auto q = [](long v) { return QuadExt(v); };
  if (name == "tetrahedron") {
    pts = {{q(1), q(1), q(1)}, {q(1), q(-1), q(-1)}, {q(-1), q(1), q(-1)}, {q(-1), q(-1), q(1)}};
  } else if (name == "octahedron") {
    for (int axis = 0; axis < 3; ++axis) {
      for (int sgn : {1, -1}) {
        P p{q(0), q(0), q(0)};
        p[axis] = q(sgn);
        pts.push_back(p);
      }
    }
  } else if (name == "cube") {
    for (int x : {1, -1})
      for (int y : {1, -1})
        for (int z : {1, -1}) pts.push_back({q(x), q(y), q(z)});
  } else if (name == "icosahedron" || name == "dodecahedron") {
    radicand = 5;
    const QuadExt phi(Rational(1, 2), Rational(1, 2), 5);
    const QuadExt inv_phi(Rational(-1, 2), Rational(1, 2), 5);
    const QuadExt first = name == "icosahedron" ? q(1) : inv_phi;
    if (name == "dodecahedron") {
      for (int x : {1, -1})
        for (int y : {1, -1})
          for (int z : {1, -1}) pts.push_back({q(x), q(y), q(z)});
    }
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        const QuadExt a = s1 > 0 ? first : -first;
        const QuadExt b = s2 > 0 ? phi : -phi;
        // Cyclic permutations of (0, a, b).
        pts.push_back({q(0), a, b});
        pts.push_back({a, b, q(0)});
        pts.push_back({b, q(0), a});
      }
    }
  } else {
    throw std::invalid_argument("unknown solid '" + name + "'");
  }
  return PointConfig(3, std::move(pts), true, radicand);
}

Spherical doubled(const Spherical& s) {
  if (!open_hemisphere_witness(s)) throw std::invalid_argument("configuration is not inside an open hemisphere");
  Spherical out = s;
  for (const auto& p : s) out.push_back({-p[0], -p[1], -p[2]});
  return out;
}

PointConfig doubled(const PointConfig& s) {
  if (!s.on_sphere()) throw std::invalid_argument("doubled needs a spherical configuration");
  if (!open_hemisphere_witness(s.quad_3d())) {
    throw std::invalid_argument("configuration is not inside an open hemisphere");
  }
  auto pts = s.points();
  for (const auto& p : s.points()) pts.push_back({-p[0], -p[1], -p[2]});
  return PointConfig(3, std::move(pts), true, s.radicand());
}

PointConfig to_config(const Planar& pts) { return PointConfig::from_rational_2d(pts); }
PointConfig to_config(const Spherical& pts) { return PointConfig::from_rational_3d(pts, true); }

std::vector<Vec2<Cyclotomic>> to_cyclotomic(const Planar& pts) {
  std::vector<Vec2<Cyclotomic>> out;
  for (const auto& p : pts) out.push_back({Cyclotomic(p[0]), Cyclotomic(p[1])});
  return out;
}

std::vector<Vec3<Cyclotomic>> to_cyclotomic(const Spherical& pts) {
  std::vector<Vec3<Cyclotomic>> out;
  for (const auto& p : pts) out.push_back({Cyclotomic(p[0]), Cyclotomic(p[1]), Cyclotomic(p[2])});
  return out;
}

std::optional<Spherical> to_rational(const std::vector<Vec3<Cyclotomic>>& pts) {
  Spherical out;
  for (const auto& p : pts) {
    Vec3<Rational> r;
    for (int k = 0; k < 3; ++k) {
      const auto& c = p[k].coefficients();
      if (c.size() > 1) return std::nullopt;
      r[k] = c.empty() ? Rational(0) : c[0];
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace vantage
