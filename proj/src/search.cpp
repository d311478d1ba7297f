#include "vantage/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "vantage/errors.hpp"
#include "vantage/formulas.hpp"
#include "vantage/line_arrangement.hpp"
#include "vantage/random.hpp"

namespace vantage {

namespace {

using Candidates = std::vector<std::pair<std::string, Planar>>;

bool all_distinct(const Planar& pts) {
  Planar copy = pts;
  std::sort(copy.begin(), copy.end(), CanonicalLess{});
  for (std::size_t i = 1; i < copy.size(); ++i) {
    if (canonical_compare(copy[i - 1], copy[i]) == 0) return false;
  }
  return true;
}

// A few random relative placements of t next to s; every distinct merge is kept.
void merge_variants(const std::string& name, const Planar& s, const Planar& t, Rng& rng, int tries, Candidates& out) {
  for (int i = 0; i < tries; ++i) {
    Planar moved = rotate_rational(t, static_cast<long>(rng.uniform_int(1, 9)), static_cast<long>(rng.uniform_int(0, 9)));
    moved = translate(moved, {Rational(static_cast<long>(rng.uniform_int(-300, 300))),
                              Rational(static_cast<long>(rng.uniform_int(-300, 300)))});
    Planar merged = s;
    merged.insert(merged.end(), moved.begin(), moved.end());
    if (all_distinct(merged)) out.emplace_back(name, std::move(merged));
  }
}

template <class Fn>
void attempt(Fn fn) {
  try {
    fn();
  } catch (const BudgetExhausted&) {
    // A gadget that did not materialize just contributes nothing.
  }
}

Candidates structured_candidates(int n, std::uint64_t seed) {
  Candidates out;
  Rng rng(seed, 0x5eedULL);
  const long line_max = (static_cast<long>(n) * n - n + 2) / 2;
  for (long k = 2L * n - 2; k <= line_max; ++k) out.emplace_back("collinear", on_x_axis(gap_config_1d(n, k)));
  attempt([&] { out.emplace_back("free", free_config(n, seed)); });
  if (n >= 4) {
    for (int k = 1; 2 * k <= n; ++k) attempt([&] { out.emplace_back("near-max", near_max_config(n, k, seed + k)); });
  }
  for (int k = 3; k <= n; ++k) attempt([&] { out.emplace_back("circle", circle_gadget(n, k, seed + 10 + k)); });
  for (int l = 1; l <= n / 2; ++l) {
    for (int k = 2; k * l <= n; ++k) {
      attempt([&] { out.emplace_back("parallel-lines", parallel_lines_gadget(n - k * l, k, l, seed + 20 + 7 * l + k)); });
    }
  }
  // Collinear or concyclic blocks next to free points.
  for (int j = 3; j < n; ++j) {
    const long jmax = (static_cast<long>(j) * j - j + 2) / 2;
    Planar rest;
    attempt([&] { rest = free_config(n - j, seed + 40 + j); });
    if (rest.empty()) continue;
    for (long k = 2L * j - 2; k <= jmax; ++k) merge_variants("collinear+free", on_x_axis(gap_config_1d(j, k)), rest, rng, 3, out);
  }
  for (int j = 3; j <= n; ++j) {
    const long tmax = static_cast<long>(j) * (j - 1) / 2;
    Planar rest;
    if (j < n) attempt([&] { rest = free_config(n - j, seed + 60 + j); });
    if (j < n && rest.empty()) continue;
    for (long t = 2L * j - 3; t <= tmax; ++t) {
      std::vector<long> exps;
      for (const auto& a : gap_config_1d(j, t + 1)) exps.push_back(a.numerator().get_si());
      // Scale the unit circle up so free points do not crowd it.
      Planar circle = concyclic_from_exponents(exps);
      for (auto& p : circle) p = scaled(p, Rational(100));
      if (j == n) {
        out.emplace_back("concyclic", circle);
      } else {
        merge_variants("concyclic+free", circle, rest, rng, 3, out);
      }
    }
  }
  for (int k = 1; k <= n; ++k) {
    if (n % k == 0 && k >= 2 && n / k >= 2) out.emplace_back("grid", grid_lines(k, n / k));
  }
  return out;
}

// Random configurations on small integer grids, optionally with mirror pairs.
Planar random_candidate(int n, Rng& rng, int max_den) {
  static constexpr std::int64_t kBoxes[] = {1, 2, 2, 3, 3, 4, 5, 6, 8, 12, 20, 60};
  for (;;) {
    const std::int64_t box = kBoxes[rng.uniform_int(0, std::size(kBoxes) - 1)];
    const std::int64_t den = max_den > 1 ? rng.uniform_int(1, max_den) : 1;
    const bool mirror = rng.uniform_int(0, 3) == 0;
    Planar pts;
    auto coord = [&] { return Rational(BigInt(static_cast<long>(rng.uniform_int(-box * den, box * den))), BigInt(static_cast<long>(den))); };
    while (static_cast<int>(pts.size()) < n) {
      Vec2<Rational> p{coord(), coord()};
      pts.push_back(p);
      // Reflect in the y-axis to force coinciding bisectors.
      if (mirror && static_cast<int>(pts.size()) < n && rng.uniform_int(0, 1) == 0) pts.push_back({-p[0], p[1]});
    }
    if (all_distinct(pts)) return pts;
  }
}

struct Found {
  long long count;
  std::uint64_t index;
  std::string strategy;
  Planar points;
};

}  // namespace

SearchRun search_achievable(int n, const SearchOptions& options) {
  if (n < 2) throw std::invalid_argument("search_achievable needs n >= 2");
  const auto start = std::chrono::steady_clock::now();
  SearchRun run;
  run.n = n;
  run.options = options;
  const long long lo = 2LL * n - 2;
  const long long hi = max_orderings(n, 2).get_si();

  auto record = [&](long long count, std::uint64_t index, const std::string& strategy, const Planar& pts) {
    if (count < lo || count > hi) {
      throw std::logic_error("count " + std::to_string(count) + " outside the admissible interval");
    }
    auto it = run.achieved.find(count);
    if (it == run.achieved.end() || index < it->second.index) run.achieved[count] = Witness{pts, strategy, index};
  };

  std::uint64_t offset = 0;
  if (options.structured) {
    const auto cands = structured_candidates(n, options.seed);
    for (std::size_t i = 0; i < cands.size(); ++i) record(planar_region_count(cands[i].second), i, cands[i].first, cands[i].second);
    run.structured_candidates = cands.size();
    offset = cands.size();
  }

  if (options.random && options.budget > 0) {
    const std::uint64_t bs = std::max<std::uint64_t>(options.block_size, 1);
    const std::uint64_t blocks = (options.budget + bs - 1) / bs;
    std::vector<std::vector<Found>> per_block(blocks);
    const int workers = std::max(1, std::min<int>(options.jobs, static_cast<int>(blocks)));
    auto work = [&](int w) {
      for (std::uint64_t b = static_cast<std::uint64_t>(w); b < blocks; b += static_cast<std::uint64_t>(workers)) {
        Rng rng(options.seed, 1000 + b);
        std::set<long long> seen;
        const std::uint64_t end = std::min(options.budget, (b + 1) * bs);
        for (std::uint64_t s = b * bs; s < end; ++s) {
          Planar pts = random_candidate(n, rng, options.max_den);
          const long long c = planar_region_count(pts);
          if (seen.insert(c).second) per_block[b].push_back(Found{c, offset + s, "random", std::move(pts)});
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (const auto& block : per_block) {
      for (const auto& f : block) record(f.count, f.index, f.strategy, f.points);
    }
    run.samples = options.budget;
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

Coverage coverage_report(int n, const std::vector<long long>& counts) {
  if (counts.empty()) throw std::invalid_argument("coverage of an empty run");
  Coverage c;
  const long long lo = n >= 2 ? 2LL * n - 2 : 1;
  const long long hi = max_orderings(n, 2).get_si();
  std::set<long long> distinct(counts.begin(), counts.end());
  c.min = distinct.empty() ? lo : *distinct.begin();
  c.max = distinct.empty() ? hi : *distinct.rbegin();
  c.achieved = static_cast<long long>(distinct.size());
  c.interval = hi - lo + 1;
  c.percentage = 100.0 * static_cast<double>(c.achieved) / static_cast<double>(c.interval);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", c.percentage);
  c.percentage_text = buf;
  return c;
}

Coverage coverage_report(const SearchRun& run) {
  std::vector<long long> counts;
  for (const auto& [k, w] : run.achieved) counts.push_back(k);
  return coverage_report(run.n, counts);
}

std::vector<long long> missing_counts(const SearchRun& run) {
  std::vector<long long> out;
  const long long hi = max_orderings(run.n, 2).get_si();
  for (long long k = 2LL * run.n - 2; k <= hi; ++k) {
    if (!run.achieved.count(k)) out.push_back(k);
  }
  return out;
}

std::vector<StoreRecord> read_store(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open store '" + path + "'");
  std::vector<StoreRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      out.push_back(StoreRecord{j.at("n").get<int>(), j.at("k").get<long long>(), j.at("seed").get<std::uint64_t>(),
                                j.at("strategy").get<std::string>(), j.at("config").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("store line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::size_t append_to_store(const std::string& path, const SearchRun& run) {
  std::set<std::pair<int, long long>> present;
  {
    std::ifstream probe(path);
    if (probe) {
      for (const auto& r : read_store(path)) present.emplace(r.n, r.k);
    }
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to store '" + path + "'");
  std::size_t written = 0;
  for (const auto& [k, w] : run.achieved) {
    if (present.count({run.n, k})) continue;
    nlohmann::json j;
    j["n"] = run.n;
    j["k"] = k;
    j["seed"] = run.options.seed;
    j["strategy"] = w.strategy;
    j["config"] = to_config(w.points).serialize();
    out << j.dump() << "\n";
    ++written;
  }
  return written;
}

StoreReport verify_witness_store(const std::string& path) {
  StoreReport report;
  const auto records = read_store(path);
  report.records = records.size();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const std::string where = "record " + std::to_string(i + 1) + " (n=" + std::to_string(r.n) + ", k=" + std::to_string(r.k) + ")";
    try {
      const PointConfig cfg = PointConfig::parse(r.config);
      if (static_cast<int>(cfg.size()) != r.n) {
        report.mismatches.push_back(where + ": has " + std::to_string(cfg.size()) + " points");
        continue;
      }
      const long long got = a_S(cfg).regions_total;
      if (got != r.k) report.mismatches.push_back(where + ": recounts to " + std::to_string(got));
    } catch (const std::exception& e) {
      report.mismatches.push_back(where + ": " + e.what());
    }
  }
  return report;
}

std::vector<Coverage> table_from_store(const std::string& path, std::vector<int>& sizes) {
  std::map<int, std::vector<long long>> by_n;
  for (const auto& r : read_store(path)) by_n[r.n].push_back(r.k);
  std::vector<Coverage> out;
  sizes.clear();
  for (const auto& [n, counts] : by_n) {
    sizes.push_back(n);
    out.push_back(coverage_report(n, counts));
  }
  return out;
}

}  // namespace vantage
