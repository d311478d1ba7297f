#include "vantage/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "vantage/constructions.hpp"
#include "vantage/formulas.hpp"
#include "vantage/line_arrangement.hpp"
#include "vantage/midpoints.hpp"
#include "vantage/random.hpp"
#include "vantage/search.hpp"
#include "vantage/sphere.hpp"
#include "vantage/two_vantage.hpp"
#include "vantage/weighted.hpp"

namespace vantage {
namespace {

struct Context {
  const AcceptanceOptions& options;
  CriterionResult& result;

  template <class... Args>
  void fail(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    result.failures.push_back(os.str());
  }
  template <class... Args>
  void note(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    result.info.push_back(os.str());
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) fail(what, ": got ", got, ", want ", want);
  }
};

long long count1d(const std::vector<Rational>& xs) {
  // Independent of the midpoint module: distinct pairwise sums via a set.
  std::set<Rational> sums;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) sums.insert(xs[i] + xs[j]);
  }
  return static_cast<long long>(sums.size()) + 1;
}

long long general_count(const Planar& pts) { return arrangement_of(pts).regions_total; }

Planar random_int_config(Rng& rng, int n, long box) {
  Planar out;
  while (static_cast<int>(out.size()) < n) {
    Vec2<Rational> p{Rational(static_cast<long>(rng.uniform_int(-box, box))),
                     Rational(static_cast<long>(rng.uniform_int(-box, box)))};
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

bool collinear(const Planar& pts) {
  for (std::size_t k = 2; k < pts.size(); ++k) {
    const auto u = pts[1] - pts[0];
    const auto v = pts[k] - pts[0];
    if (!(u[0] * v[1] - u[1] * v[0]).is_zero()) return false;
  }
  return true;
}

void max_formulas(Context& c) {
  const std::vector<std::pair<int, long>> row{{3, 6}, {4, 18}, {5, 46}, {6, 101}, {7, 197}, {8, 351}};
  for (auto [n, m] : row) c.expect_eq(max_orderings(n, 2), BigInt(m), "M(" + std::to_string(n) + ",2)");
  for (int n = 1; n <= 30; ++n) {
    c.expect_eq(max_orderings_plane_poly(n), max_orderings(n, 2), "planar polynomial at n=" + std::to_string(n));
  }
}

void free_witnesses(Context& c) {
  for (int n = 3; n <= 7; ++n) {
    try {
      const Planar p = free_config(n, 1000 + n, kDefaultAttempts);
      c.expect_eq(BigInt(static_cast<long>(general_count(p))), max_orderings(n, 2), "free_config n=" + std::to_string(n));
    } catch (const std::exception& e) {
      c.fail("free_config n=", n, ": ", e.what());
    }
  }
}

void minimum(Context& c) {
  for (int n = 2; n <= 12; ++n) {
    const auto xs = equally_spaced_line(n);
    c.expect_eq(count1d(xs), 2LL * n - 2, "equally spaced 1-D n=" + std::to_string(n));
    c.expect_eq(general_count(on_x_axis(xs)), 2LL * n - 2, "equally spaced planar n=" + std::to_string(n));
    c.expect_eq(min_orderings(n), BigInt(2 * n - 2), "m(n) n=" + std::to_string(n));
  }
  const std::vector<Rational> odd{Rational(1), Rational(2), Rational(4), Rational(5)};
  c.expect_eq(count1d(odd), 6LL, "{1,2,4,5}");
  c.expect_eq(general_count(on_x_axis(odd)), 6LL, "{1,2,4,5} planar");
  Rng rng(3, 0);
  int tested = 0;
  while (tested < 500) {
    const int n = 3 + static_cast<int>(rng.uniform_int(0, 4));
    const Planar p = random_int_config(rng, n, 6);
    if (collinear(p)) continue;
    ++tested;
    const long long got = general_count(p);
    if (got <= 2LL * n - 2) c.fail("non-collinear n=", n, " counted ", got);
  }
  c.note(tested, " random non-collinear samples");
}

void gap_filling(Context& c) {
  for (int n = 6; n <= 10; ++n) {
    const long lo = 2L * n - 2;
    const long hi = (static_cast<long>(n) * n - n + 2) / 2;
    for (long k = lo; k <= hi; ++k) {
      try {
        const auto xs = gap_config_1d(n, k);
        if (static_cast<int>(xs.size()) != n) c.fail("gap_config_1d(", n, ",", k, ") has ", xs.size(), " points");
        c.expect_eq(count1d(xs), static_cast<long long>(k), "gap_config_1d(" + std::to_string(n) + "," + std::to_string(k) + ")");
      } catch (const std::exception& e) {
        c.fail("gap_config_1d(", n, ",", k, "): ", e.what());
      }
    }
  }
}

void free_sums(Context& c) {
  static constexpr long kTriples[][2] = {{3, 4}, {5, 12}, {8, 15}, {7, 24}, {20, 21}, {12, 35}};
  Rng rng(5, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int s = 1 + static_cast<int>(rng.uniform_int(0, 3));
    const int t = 1 + static_cast<int>(rng.uniform_int(0, 3));
    // Small boxes so that S and T often carry their own coincidences.
    const Planar a = random_int_config(rng, s, 3);
    const Planar b0 = random_int_config(rng, t, 3);
    const auto& r = kTriples[rng.uniform_int(0, 5)];
    const Vec2<Rational> offset{Rational(static_cast<long>(rng.uniform_int(100000, 900000)), 7),
                                Rational(static_cast<long>(rng.uniform_int(100000, 900000)), 11)};
    const Planar b = translate(rotate_rational(b0, r[0], r[1]), offset);
    Planar u = a;
    u.insert(u.end(), b.begin(), b.end());
    const BigInt want = BigInt(static_cast<long>(general_count(a))) + BigInt(static_cast<long>(general_count(b))) +
                        free_sum_increment(s, t);
    const BigInt got(static_cast<long>(general_count(u)));
    if (got != want) c.fail("free sum trial ", trial, " (s=", s, ", t=", t, "): ", got, " != ", want);
  }
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      c.expect_eq(max_orderings(k, 2) + max_orderings(n - k, 2) + free_sum_increment(k, n - k), max_orderings(n, 2),
                  "M(k)+M(n-k)+g at n=" + std::to_string(n) + ",k=" + std::to_string(k));
    }
  }
}

void gadgets(Context& c) {
  for (int k = 2; k <= 4; ++k) {
    try {
      const Planar p = trapezoid_gadget(k, 40 + k);
      const BigInt want = max_orderings(2 * k, 2) - k + 1;
      c.expect_eq(trapezoid_count(k), want, "trapezoid_count(" + std::to_string(k) + ")");
      c.expect_eq(BigInt(static_cast<long>(general_count(p))), want, "trapezoid_gadget(" + std::to_string(k) + ")");
    } catch (const std::exception& e) {
      c.fail("trapezoid_gadget(", k, "): ", e.what());
    }
  }
  for (int n = 2; n <= 10; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      try {
        const Planar p = near_max_config(n, k, 60);
        c.expect_eq(BigInt(static_cast<long>(general_count(p))), max_orderings(n, 2) - k,
                    "near-maximum n=" + std::to_string(n) + ",k=" + std::to_string(k));
      } catch (const std::exception& e) {
        c.fail("near-maximum n=", n, ",k=", k, ": ", e.what());
      }
    }
  }
  for (int k : {2, 3}) {
    for (int l : {1, 2}) {
      for (int m = 0; m <= 3; ++m) {
        const std::string tag = "(m,k,l)=(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
        try {
          const Planar p = parallel_lines_gadget(m, k, l, 80);
          const BigInt got(static_cast<long>(general_count(p)));
          c.expect_eq(got, parallel_gadget_poly(m, k, l), "parallel gadget polynomial form " + tag);
          c.expect_eq(got, parallel_gadget_k_form(m, k, l), "parallel gadget M(n)-k*s(k,k-2) form " + tag);
          if (got != parallel_gadget_deficit_form(m, k, l)) c.fail("parallel gadget M(n)-l*s(k,k-2) form ", tag);
        } catch (const std::exception& e) {
          c.fail("parallel_lines_gadget", tag, ": ", e.what());
        }
      }
    }
  }
  for (int n = 2; n <= 7; ++n) {
    for (int k = 2; k <= n; ++k) {
      try {
        const Planar p = circle_gadget(n, k, 90);
        const BigInt want = max_orderings(n, 2) - max_orderings(k, 2) + k * (k - 1);
        c.expect_eq(circle_gadget_count(n, k), want, "circle_gadget_count");
        c.expect_eq(BigInt(static_cast<long>(general_count(p))), want,
                    "circle_gadget(" + std::to_string(n) + "," + std::to_string(k) + ")");
      } catch (const std::exception& e) {
        c.fail("circle_gadget(", n, ",", k, "): ", e.what());
      }
    }
  }
}

void sphere(Context& c) {
  std::vector<long long> counts;
  auto track = [&](long long x) {
    counts.push_back(x);
    return x;
  };
  const std::vector<long long> platonic_want{24, 48, 96, 240, 240};
  for (std::size_t i = 0; i < platonic_names().size(); ++i) {
    const auto& name = platonic_names()[i];
    const long long got = track(sphere_count(platonic(name)).regions_total);
    c.expect_eq(got, platonic_want[i], name);
  }
  const std::vector<std::pair<int, long>> max_row{{4, 24}, {6, 172}, {8, 646}, {12, 3852}, {20, 33632}};
  for (auto [n, m] : max_row) c.expect_eq(sphere_max(n), BigInt(m), "sphere_max(" + std::to_string(n) + ")");
  for (int n = 2; n <= 5; ++n) {
    try {
      const Spherical s = free_sphere_config(n, 120 + n, false);
      c.expect_eq(BigInt(static_cast<long>(track(sphere_arrangement_of(s).regions_total))), sphere_max(n),
                  "free spherical n=" + std::to_string(n));
    } catch (const std::exception& e) {
      c.fail("free spherical n=", n, ": ", e.what());
    }
  }
  for (int n = 3; n <= 5; ++n) {
    try {
      const Spherical d = doubled(free_sphere_config(n, 140 + n, true));
      const auto summary = sphere_arrangement_of(d);
      const auto want = doubled_census(n);
      auto vertices = [&](int m) {
        const auto it = summary.multiplicity_histogram.find(m);
        return BigInt(static_cast<long>(it == summary.multiplicity_histogram.end() ? 0 : 2 * it->second));
      };
      const std::string tag = "doubled n=" + std::to_string(n);
      c.expect_eq(BigInt(static_cast<long>(track(summary.regions_total))), sphere_doubled_count(n), tag);
      c.expect_eq(summary.circle_count, static_cast<long long>(n) * n, tag + " circles");
      c.expect_eq(vertices(2), want.v4, tag + " v4");
      c.expect_eq(vertices(3), want.v6, tag + " v6");
      c.expect_eq(vertices(4), want.v8, tag + " v8");
      if (summary.multiplicity_histogram.size() > 3) c.fail(tag, ": vertices of degree > 8");
    } catch (const std::exception& e) {
      c.fail("doubled n=", n, ": ", e.what());
    }
  }
  Rng rng(7, 0);
  int compared = 0;
  int skipped = 0;
  while (compared < 50) {
    const int n = 3 + static_cast<int>(rng.uniform_int(0, 3));
    const Planar p = random_int_config(rng, n, 20);
    long long via_plane = 0;
    try {
      via_plane = plane_to_sphere_count(p);
    } catch (const std::invalid_argument&) {
      ++skipped;  // parallel bisectors
      continue;
    }
    ++compared;
    const long long direct = track(sphere_arrangement_of(embed_on_hemisphere(p)).regions_total);
    if (direct != via_plane) c.fail("plane-to-sphere: u+2b = ", via_plane, ", direct = ", direct);
  }
  c.note("plane-to-sphere: ", compared, " compared, ", skipped, " parallel sets skipped");
  for (int n = 4; n <= 8; ++n) {
    const auto w = sphere_min_witness(n);
    c.expect_eq(track(w.count), 2LL * n, "concyclic equal n=" + std::to_string(n));
    c.expect_eq(sphere_min(n), BigInt(2 * n), "sphere_min(" + std::to_string(n) + ")");
    if (w.witness) c.expect_eq(track(sphere_count(*w.witness).regions_total), 2LL * n, "quadratic witness n=" + std::to_string(n));
    if (n == 4) {
      if (!w.rectangle) {
        c.fail("n=4 rectangle missing");
      } else {
        c.expect_eq(track(sphere_count(*w.rectangle).regions_total), 8LL, "n=4 rectangle");
      }
    }
  }
  for (long long x : counts) {
    if (x % 2 != 0) c.fail("odd spherical count ", x);
  }
  c.note(counts.size(), " spherical counts checked for parity");
}

std::set<long long> achieved_set(const SearchRun& run) {
  std::set<long long> out;
  for (const auto& [k, w] : run.achieved) out.insert(k);
  return out;
}

void search(Context& c) {
  SearchOptions opts;
  opts.budget = 100000;
  opts.seed = 1;
  opts.jobs = c.options.jobs;
  for (int n = 3; n <= 5; ++n) {
    const SearchRun run = search_achievable(n, opts);
    const auto got = achieved_set(run);
    for (const auto& [k, w] : run.achieved) {
      if (static_cast<int>(w.points.size()) != n || general_count(w.points) != k) {
        c.fail("witness for n=", n, ", k=", k, " does not re-verify");
      }
    }
    const Coverage cov = coverage_report(run);
    c.note("n=", n, ": ", cov.achieved, "/", cov.interval, " = ", cov.percentage_text, " in ", run.seconds, " s");
    if (n == 3 && got != std::set<long long>{4, 6}) c.fail("n=3 achieved set differs from {4,6}");
    if (n == 4) {
      std::set<long long> want;
      for (long long k = 6; k <= 18; ++k) {
        if (k != 9 && k != 11 && k != 13 && k != 14 && k != 15) want.insert(k);
      }
      if (got != want) c.fail("n=4 achieved set differs from [6,18] minus {9,11,13,14,15}");
    }
    if (n == 5 && cov.percentage < 61.0) c.fail("n=5 coverage ", cov.percentage_text, " < 61%");
  }
}

void two_vantage(Context& c) {
  Rng rng(9, 0);
  int instances = 0;
  while (instances < 10000) {
    const int n = 2 + static_cast<int>(rng.uniform_int(0, 6));
    std::vector<Rational> xs;
    while (static_cast<int>(xs.size()) < n) {
      const Rational x = rng.rational(40, 4);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    const Rational v1 = rng.rational(50, 4);
    const Rational v2 = rng.rational(50, 4);
    const Ordering two = ordering_two_vantage_1d(xs, v1, v2);
    if (!two.is_strict()) continue;
    ++instances;
    const Ordering one = ordering_from_vantage(xs, reduce_to_single_1d(xs, v1, v2));
    if (one != two) c.fail("reduction differs: ", two.str(), " vs ", one.str());
    if (c.result.failures.size() > 20) return;
  }
  std::vector<Rational> grid;
  for (int i = -6; i <= 6; ++i) grid.push_back(Rational(BigInt(i), BigInt(2)));
  long long ties = 0;
  for (const auto& pi : grid) {
    for (const auto& pj : grid) {
      if (pi == pj) continue;
      for (const auto& v1 : grid) {
        for (const auto& v2 : grid) {
          const bool tie = abs(pi - v1) + abs(pi - v2) == abs(pj - v1) + abs(pj - v2);
          const TieKind kind = classify_tie_1d(pi, pj, v1, v2);
          if (tie != (kind != TieKind::none)) {
            c.fail("tie classification at (", pi, ",", pj, ",", v1, ",", v2, ")");
            return;
          }
          ties += tie;
        }
      }
    }
  }
  c.note(ties, " ties on the grid enumeration");
  const std::vector<long> table{2, 4, 8, 16, 30, 54, 94, 160, 268};
  for (int n = 2; n <= 10; ++n) {
    const BigInt cn = 2 * (fibonacci(n + 2) - n);
    c.expect_eq(velo_bound(n), cn, "c_" + std::to_string(n));
    c.expect_eq(cn, BigInt(table[n - 2]), "c_n vs b_n at n=" + std::to_string(n));
  }
  for (int n = 4; n <= 8; ++n) {
    Planar pts;
    std::vector<int> positions;
    for (int i = 1; i <= n; ++i) {
      pts.push_back({Rational(i), Rational(0)});
      positions.push_back(i);
    }
    const auto s = sample_two_vantage_orderings(pts, 1000000, 11, c.options.jobs);
    const auto got = static_cast<long>(s.orderings.size());
    c.note("b_", n, " = ", got, " (", s.samples, " samples, ", s.exact_fallbacks, " exact fallbacks)");
    c.expect_eq(BigInt(got), BigInt(table[n - 2]), "sampled b_" + std::to_string(n));
    if (BigInt(got) > two_vantage_line_bound(n)) c.fail("b_", n, " exceeds 2^(n-1)");
    if (BigInt(got) > velo_bound(n)) c.fail("b_", n, " exceeds c_n");
    for (const auto& [ranks, first] : s.orderings) {
      const Ordering o = Ordering::strict(ranks);
      if (!contiguity_check(o, positions)) c.fail("non-contiguous ordering ", o.str());
      if (!is_velo_valid(updown(o, positions))) c.fail("velo-invalid ordering ", o.str());
    }
  }
}

void weighted(Context& c) {
  Rng rng(13, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_int(0, 5));
    Planar s;
    while (static_cast<int>(s.size()) < n) {
      const auto p = rng.point2(10, 3);
      if (std::find(s.begin(), s.end(), p) == s.end()) s.push_back(p);
    }
    const PointConfig cfg = PointConfig::from_rational_2d(s);
    const auto v = rng.point2(12, 5);
    const Weights w({Rational(BigInt(static_cast<long>(rng.uniform_int(1, 9))), BigInt(static_cast<long>(rng.uniform_int(1, 4)))),
                     Rational(BigInt(static_cast<long>(rng.uniform_int(1, 9))), BigInt(static_cast<long>(rng.uniform_int(1, 4))))});
    const PointConfig::Point vp{QuadExt(v[0]), QuadExt(v[1])};
    const Ordering direct = ordering_weighted_direct(cfg, vp, w);
    const Ordering via = ordering_weighted(cfg, vp, w);
    if (direct != via) c.fail("weighted ordering mismatch in trial ", trial);

    const auto& p = s[0];
    const auto& q = s[1];
    const Line<Rational> formula = bisector_line_weighted(p, q, w).canonical();
    // Bisector of the transformed pair, mapped back to the original coordinates.
    const Vec2<Rational> tp{p[0] * w[0], p[1] * w[1]};
    const Vec2<Rational> tq{q[0] * w[0], q[1] * w[1]};
    const Line<Rational> t = perpendicular_bisector(tp, tq);
    const Line<Rational> back = Line<Rational>{t.a * w[0], t.b * w[1], t.c}.canonical();
    if (!(formula == back)) c.fail("weighted bisector formula mismatch in trial ", trial);
    const auto d = q - p;
    if (w[0] != w[1] && !d[0].is_zero() && !d[1].is_zero()) {
      if ((formula.a * d[1] - formula.b * d[0]).is_zero()) c.fail("weighted bisector perpendicular in trial ", trial);
    }
    if (c.result.failures.size() > 20) return;
  }
  const Line<Rational> ex = bisector_line_weighted({Rational(0), Rational(0)}, {Rational(1), Rational(1)},
                                                   Weights({Rational(2), Rational(1)}));
  if (!(ex.canonical() == Line<Rational>{Rational(4), Rational(1), Rational(5, 2)}.canonical())) {
    c.fail("weighted bisector of (0,0),(1,1) with w=(2,1) is not 4x+y=5/2");
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::function<void(Context&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "maximum formulas", 1, max_formulas},
      {2, "free witnesses", 30, free_witnesses},
      {3, "minimum", 60, minimum},
      {4, "1-D gap filling", 10, gap_filling},
      {5, "free-sum lemma", 120, free_sums},
      {6, "gadgets", 300, gadgets},
      {7, "sphere", 300, sphere},
      {8, "achievability search", 900, search},
      {9, "two vantage points", 1800, two_vantage},
      {10, "weighted preferences", 10, weighted},
  };
  return all;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (const auto& crit : criteria()) {
    if (!options.only.empty() && !options.only.count(crit.id)) continue;
    CriterionResult r;
    r.id = crit.id;
    r.title = crit.title;
    r.limit_seconds = crit.limit;
    Context ctx{options, r};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.body(ctx);
    } catch (const std::exception& e) {
      ctx.fail("uncaught: ", e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char line[160];
    std::snprintf(line, sizeof line, "[%s] %2d %-22s %8.2fs (limit %gs)", r.passed() ? "PASS" : "FAIL", r.id,
                  r.title.c_str(), r.seconds, r.limit_seconds);
    out << line << '\n';
    if (r.seconds > r.limit_seconds) out << "       over time limit\n";
    const std::size_t shown = options.verbose ? r.failures.size() : std::min<std::size_t>(r.failures.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) out << "       " << r.failures[i] << '\n';
    if (shown < r.failures.size()) out << "       ... " << r.failures.size() - shown << " more\n";
    if (options.verbose) {
      for (const auto& s : r.info) out << "       - " << s << '\n';
    }
    out.flush();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace vantage
