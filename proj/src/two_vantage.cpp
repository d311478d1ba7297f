#include "vantage/two_vantage.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "vantage/errors.hpp"
#include "vantage/random.hpp"
#include "vantage/sqrt_compare.hpp"

namespace vantage {

namespace {

Ordering order_by_distance_sums(const std::vector<Rational>& d1, const std::vector<Rational>& d2) {
  return ordering_by(d1.size(), [&](int i, int j) { return cmp_sqrt_sum(d1[i], d2[i], d1[j], d2[j]); });
}

}  // namespace

template <std::size_t N>
Ordering ordering_two_vantage(const std::vector<std::array<Rational, N>>& points, const std::array<Rational, N>& v1,
                              const std::array<Rational, N>& v2) {
  std::vector<Rational> d1, d2;
  for (const auto& p : points) {
    d1.push_back(squared_norm(p - v1));
    d2.push_back(squared_norm(p - v2));
  }
  return order_by_distance_sums(d1, d2);
}

template Ordering ordering_two_vantage<2>(const std::vector<Vec2<Rational>>&, const Vec2<Rational>&,
                                          const Vec2<Rational>&);
template Ordering ordering_two_vantage<3>(const std::vector<Vec3<Rational>>&, const Vec3<Rational>&,
                                          const Vec3<Rational>&);

Ordering ordering_two_vantage_1d(const std::vector<Rational>& points, const Rational& v1, const Rational& v2) {
  std::vector<Rational> d1, d2;
  for (const auto& p : points) {
    d1.push_back(square(p - v1));
    d2.push_back(square(p - v2));
  }
  return order_by_distance_sums(d1, d2);
}

Ordering ordering_two_vantage(const PointConfig& config, const PointConfig::Point& v1, const PointConfig::Point& v2) {
  if (!config.is_rational()) throw FieldMismatch("two-vantage orderings need rational coordinates");
  const auto dim = static_cast<std::size_t>(config.dimension());
  if (v1.size() != dim || v2.size() != dim) throw FieldMismatch("vantage point dimension mismatch");
  for (const auto* v : {&v1, &v2}) {
    for (const auto& x : *v) {
      if (!x.is_rational()) throw FieldMismatch("two-vantage orderings need rational vantage points");
    }
  }
  std::vector<Rational> d1, d2;
  for (const auto& p : config.points()) {
    Rational a(0), b(0);
    for (std::size_t k = 0; k < dim; ++k) {
      a += square(p[k].rational_part() - v1[k].rational_part());
      b += square(p[k].rational_part() - v2[k].rational_part());
    }
    d1.push_back(a);
    d2.push_back(b);
  }
  return order_by_distance_sums(d1, d2);
}

std::string to_string(TieKind kind) {
  switch (kind) {
    case TieKind::containment: return "containment";
    case TieKind::midpoint: return "midpoint";
    default: return "none";
  }
}

TieKind classify_tie_1d(const Rational& pi, const Rational& pj, const Rational& v1, const Rational& v2) {
  if (pi == pj) throw std::invalid_argument("classify_tie_1d needs distinct points");
  const Rational& lo_p = std::min(pi, pj);
  const Rational& hi_p = std::max(pi, pj);
  const Rational& lo_v = std::min(v1, v2);
  const Rational& hi_v = std::max(v1, v2);
  if (lo_v <= lo_p && hi_p <= hi_v) return TieKind::containment;
  if (lo_p < lo_v && hi_v < hi_p && lo_p + hi_p == lo_v + hi_v) return TieKind::midpoint;
  return TieKind::none;
}

Rational reduce_to_single_1d(const std::vector<Rational>& points, const Rational& v1, const Rational& v2) {
  if (!ordering_two_vantage_1d(points, v1, v2).is_strict()) {
    throw std::invalid_argument("two-vantage ordering has ties");
  }
  return (v1 + v2) / Rational(2);
}

std::string updown(const Ordering& o, const std::vector<int>& positions) {
  if (!o.is_strict()) throw std::invalid_argument("updown needs a strict ordering");
  const auto ranks = o.ranks();
  std::string out;
  for (std::size_t k = 0; k + 1 < ranks.size(); ++k) {
    out += positions.at(ranks[k + 1] - 1) > positions.at(ranks[k] - 1) ? '1' : '0';
  }
  return out;
}

std::string updown(const Ordering& o) {
  std::vector<int> id(o.size());
  std::iota(id.begin(), id.end(), 1);
  return updown(o, id);
}

bool is_velo_valid(const std::string& seq) {
  std::vector<std::pair<char, std::size_t>> runs;
  for (char c : seq) {
    if (c != '0' && c != '1') throw std::invalid_argument("up-down sequences are binary");
    if (runs.empty() || runs.back().first != c) {
      runs.emplace_back(c, 1);
    } else {
      ++runs.back().second;
    }
  }
  bool double0 = false;
  bool double1 = false;
  for (std::size_t r = 1; r + 1 < runs.size(); ++r) {
    if (runs[r].second >= 2) (runs[r].first == '0' ? double0 : double1) = true;
  }
  return !(double0 && double1);
}

bool contiguity_check(const Ordering& o, const std::vector<int>& positions) {
  if (!o.is_strict()) throw std::invalid_argument("contiguity_check needs a strict ordering");
  int lo = 0;
  int hi = 0;
  int count = 0;
  for (int r : o.ranks()) {
    const int p = positions.at(r - 1);
    lo = count == 0 ? p : std::min(lo, p);
    hi = count == 0 ? p : std::max(hi, p);
    ++count;
    if (hi - lo + 1 != count) return false;
  }
  return true;
}

bool contiguity_check(const Ordering& o) {
  std::vector<int> id(o.size());
  std::iota(id.begin(), id.end(), 1);
  return contiguity_check(o, id);
}

long long count_velo_valid(int length) {
  if (length < 0 || length > 40) throw std::invalid_argument("length out of range");
  long long count = 0;
  std::string s(static_cast<std::size_t>(length), '0');
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
    for (int k = 0; k < length; ++k) s[k] = (mask >> k) & 1 ? '1' : '0';
    if (is_velo_valid(s)) ++count;
  }
  return count;
}

std::vector<int> collinear_positions(const std::vector<Vec2<Rational>>& points) {
  if (points.size() < 2) return std::vector<int>(points.size(), 1);
  const Vec2<Rational> dir = points[1] - points[0];
  for (const auto& p : points) {
    const Vec2<Rational> d = p - points[0];
    if (!(d[0] * dir[1] - d[1] * dir[0]).is_zero()) return {};
  }
  std::vector<Rational> key;
  for (const auto& p : points) key.push_back(dot(p - points[0], dir));
  std::vector<int> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<int> pos(points.size());
  for (std::size_t r = 0; r < idx.size(); ++r) pos[idx[r]] = static_cast<int>(r) + 1;
  return pos;
}

namespace {

struct Prepared {
  std::vector<Vec2<Rational>> exact;
  std::vector<double> x, y;
  double cx = 0, cy = 0, extent = 1, magnitude = 0;
};

struct BlockResult {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> found;  // packed ordering, sample index
  std::uint64_t samples = 0, ties = 0, fallbacks = 0;
};

std::uint64_t pack(const std::vector<int>& idx) {
  std::uint64_t key = 0;
  for (int i : idx) key = (key << 4) | static_cast<std::uint64_t>(i);
  return key;
}

std::vector<int> unpack(std::uint64_t key, std::size_t n) {
  std::vector<int> out(n);
  for (std::size_t k = n; k-- > 0;) {
    out[k] = static_cast<int>(key & 15);
    key >>= 4;
  }
  return out;
}

class Evaluator {
 public:
  explicit Evaluator(const Prepared& p) : p_(p), s_(p.x.size()), idx_(p.x.size()) {}

  // Returns false on a tie.
  bool order(double ax, double ay, double bx, double by, std::vector<int>& out, std::uint64_t& fallbacks) {
    const std::size_t n = s_.size();
    for (std::size_t i = 0; i < n; ++i) {
      s_[i] = std::sqrt((p_.x[i] - ax) * (p_.x[i] - ax) + (p_.y[i] - ay) * (p_.y[i] - ay)) +
              std::sqrt((p_.x[i] - bx) * (p_.x[i] - bx) + (p_.y[i] - by) * (p_.y[i] - by));
    }
    const double mag = p_.magnitude + std::max({std::fabs(ax), std::fabs(ay), std::fabs(bx), std::fabs(by)});
    const double tol = 1e-12 * (1.0 + mag);
    exact_ready_ = false;
    va_ = {ax, ay};
    vb_ = {bx, by};
    std::iota(idx_.begin(), idx_.end(), 0);
    auto cmp = [&](int i, int j) {
      const double diff = s_[i] - s_[j];
      if (diff > tol) return 1;
      if (diff < -tol) return -1;
      ++fallbacks;
      return exact_compare(i, j);
    };
    std::sort(idx_.begin(), idx_.end(), [&](int i, int j) { return cmp(i, j) < 0; });
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (std::fabs(s_[idx_[k]] - s_[idx_[k + 1]]) <= tol && exact_compare(idx_[k], idx_[k + 1]) == 0) return false;
    }
    out = idx_;
    return true;
  }

 private:
  int exact_compare(int i, int j) {
    if (!exact_ready_) {
      const Vec2<Rational> a{Rational::from_double(va_[0]), Rational::from_double(va_[1])};
      const Vec2<Rational> b{Rational::from_double(vb_[0]), Rational::from_double(vb_[1])};
      d1_.clear();
      d2_.clear();
      for (const auto& q : p_.exact) {
        d1_.push_back(squared_norm(q - a));
        d2_.push_back(squared_norm(q - b));
      }
      exact_ready_ = true;
    }
    return cmp_sqrt_sum(d1_[i], d2_[i], d1_[j], d2_[j]);
  }

  const Prepared& p_;
  std::vector<double> s_;
  std::vector<int> idx_;
  bool exact_ready_ = false;
  std::array<double, 2> va_{}, vb_{};
  std::vector<Rational> d1_, d2_;
};

BlockResult run_block(const Prepared& p, std::uint64_t seed, std::uint64_t block, std::uint64_t begin,
                      std::uint64_t end, const SamplerSpec& spec) {
  BlockResult out;
  Rng rng(seed, block);
  Evaluator eval(p);
  std::unordered_map<std::uint64_t, std::uint64_t> seen;
  std::vector<std::array<double, 4>> productive;
  const double lo = std::log(spec.min_radius * p.extent);
  const double hi = std::log(spec.max_radius * p.extent);
  auto around_centre = [&](double& x, double& y) {
    const double r = std::exp(lo + (hi - lo) * rng.uniform01());
    const double t = 2.0 * M_PI * rng.uniform01();
    x = p.cx + r * std::cos(t);
    y = p.cy + r * std::sin(t);
  };
  auto on_grid = [&](double& x, double& y) {
    const double span = 3.0 * p.extent;
    x = p.cx - span / 2 + span * static_cast<double>(rng.uniform_int(0, spec.grid_size)) / spec.grid_size;
    y = p.cy - span / 2 + span * static_cast<double>(rng.uniform_int(0, spec.grid_size)) / spec.grid_size;
  };
  std::vector<int> ord;
  for (std::uint64_t s = begin; s < end; ++s) {
    std::array<double, 4> v{};
    const double pick = rng.uniform01();
    if (pick < spec.grid_share) {
      on_grid(v[0], v[1]);
      on_grid(v[2], v[3]);
    } else if (pick < spec.grid_share + spec.refine_share && !productive.empty()) {
      v = productive[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(productive.size()) - 1))];
      const double scale = p.extent * std::exp(std::log(1e-5) + (std::log(0.05) - std::log(1e-5)) * rng.uniform01());
      for (auto& c : v) c += scale * (2.0 * rng.uniform01() - 1.0);
    } else {
      around_centre(v[0], v[1]);
      around_centre(v[2], v[3]);
    }
    ++out.samples;
    if (!eval.order(v[0], v[1], v[2], v[3], ord, out.fallbacks)) {
      ++out.ties;
      continue;
    }
    for (auto& i : ord) ++i;
    const std::uint64_t key = pack(ord);
    if (seen.emplace(key, s).second) {
      out.found.emplace_back(key, s);
      productive.push_back(v);
    }
  }
  return out;
}

}  // namespace

TwoVantageSample sample_two_vantage_orderings(const std::vector<Vec2<Rational>>& points, std::uint64_t budget,
                                              std::uint64_t seed, int jobs, const SamplerSpec& spec) {
  if (points.empty()) return {};
  if (points.size() > 15) throw std::invalid_argument("sampler supports at most 15 points");
  Prepared p;
  p.exact = points;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& q : points) {
    p.x.push_back(q[0].to_double());
    p.y.push_back(q[1].to_double());
    xmin = std::min(xmin, p.x.back());
    xmax = std::max(xmax, p.x.back());
    ymin = std::min(ymin, p.y.back());
    ymax = std::max(ymax, p.y.back());
    p.magnitude = std::max({p.magnitude, std::fabs(p.x.back()), std::fabs(p.y.back())});
  }
  p.cx = (xmin + xmax) / 2;
  p.cy = (ymin + ymax) / 2;
  p.extent = std::max({xmax - xmin, ymax - ymin, 1e-9});

  const std::uint64_t block_size = std::max<std::uint64_t>(spec.block_size, 1);
  const std::uint64_t blocks = (budget + block_size - 1) / block_size;
  std::vector<BlockResult> results(blocks);
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::uint64_t>(blocks, 1))));
  auto work = [&](int w) {
    for (std::uint64_t b = static_cast<std::uint64_t>(w); b < blocks; b += static_cast<std::uint64_t>(workers)) {
      results[b] = run_block(p, seed, b, b * block_size, std::min(budget, (b + 1) * block_size), spec);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  TwoVantageSample out;
  for (const auto& r : results) {
    out.samples += r.samples;
    out.tie_samples += r.ties;
    out.exact_fallbacks += r.fallbacks;
    for (const auto& [key, index] : r.found) {
      auto ranks = unpack(key, points.size());
      auto it = out.orderings.find(ranks);
      if (it == out.orderings.end()) {
        out.orderings.emplace(std::move(ranks), index);
      } else {
        it->second = std::min(it->second, index);
      }
    }
  }
  return out;
}

}  // namespace vantage
