#include "vantage/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "vantage/acceptance.hpp"
#include "vantage/constructions.hpp"
#include "vantage/errors.hpp"
#include "vantage/formulas.hpp"
#include "vantage/line_arrangement.hpp"
#include "vantage/midpoints.hpp"
#include "vantage/ordering.hpp"
#include "vantage/search.hpp"
#include "vantage/sphere.hpp"
#include "vantage/two_vantage.hpp"
#include "vantage/weighted.hpp"

namespace vantage::cli {
namespace {

using json = nlohmann::json;

// Thrown for anything wrong with an input file; maps to kExitBadInput.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kSubcommands{"count-regions", "count-sphere",      "ordering", "two-vantage",
                                            "construct",     "formula",           "search-achievable",
                                            "report",        "platonic-table",    "verify"};

PointConfig load(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") {
      std::stringstream buf;
      buf << in.rdbuf();
      return PointConfig::parse(buf.str());
    }
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return PointConfig::parse(buf.str());
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(path.empty() || path == "-" ? std::string("stdin: ") + e.what() : path + ": " + e.what());
  }
}

void emit(const PointConfig& cfg, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << cfg.serialize();
  } else {
    cfg.write_file(path);
    // Round-trip guard: what we wrote must read back identically.
    if (!(PointConfig::read_file(path) == cfg)) throw std::runtime_error("round-trip mismatch writing '" + path + "'");
  }
}

PointConfig::Point parse_point(const std::string& text, int dimension) {
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::istringstream is(norm);
  PointConfig::Point p;
  std::string tok;
  try {
    while (is >> tok) p.push_back(QuadExt::parse(tok));
  } catch (const std::exception& e) {
    throw UsageError("bad point '" + text + "': " + e.what());
  }
  if (static_cast<int>(p.size()) != dimension) {
    throw UsageError("point '" + text + "' needs " + std::to_string(dimension) + " coordinates");
  }
  return p;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::istringstream is(norm);
  std::vector<Rational> out;
  std::string tok;
  try {
    while (is >> tok) out.push_back(Rational::parse(tok));
  } catch (const std::exception& e) {
    throw UsageError("bad list '" + text + "': " + e.what());
  }
  return out;
}

void print_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows, bool csv,
                 std::ostream& out) {
  if (csv) {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
      out << '\n';
    };
    line(head);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) width[i] = head[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out << "  ";
      out << std::setw(static_cast<int>(width[i])) << r[i];
    }
    out << '\n';
  };
  line(head);
  for (const auto& r : rows) line(r);
}

json histogram_json(const std::map<int, long long>& h) {
  json j = json::object();
  for (const auto& [m, c] : h) j[std::to_string(m)] = c;
  return j;
}

std::string histogram_text(const std::map<int, long long>& h) {
  std::string s;
  for (const auto& [m, c] : h) s += (s.empty() ? "" : " ") + std::to_string(m) + ":" + std::to_string(c);
  return s.empty() ? "-" : s;
}

std::string normalize_kind(std::string kind) {
  std::string out;
  for (char ch : kind) {
    if (ch != '_' && ch != '-') out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

int cmd_count_regions(const std::string& path, bool as_json, std::istream& in, std::ostream& out) {
  const PointConfig cfg = load(path, in);
  json j;
  j["points"] = cfg.size();
  j["dimension"] = cfg.dimension();
  j["field"] = cfg.field_name();
  if (cfg.dimension() == 1) {
    const auto xs = cfg.quad_1d();
    std::vector<QuadExt> sums;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t k = i + 1; k < xs.size(); ++k) sums.push_back(xs[i] + xs[k]);
    }
    std::sort(sums.begin(), sums.end(), [](const auto& a, const auto& b) { return canonical_compare(a, b) < 0; });
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    j["midpoints"] = sums.size();
    j["regions"] = sums.size() + 1;
    j["max"] = max_orderings(static_cast<int>(cfg.size()), 1).get_str();
  } else if (cfg.dimension() == 2) {
    const PlanarSummary s = a_S(cfg);
    j["lines"] = s.line_count;
    j["direction_classes"] = s.direction_classes;
    j["vertices_by_multiplicity"] = histogram_json(s.multiplicity_histogram);
    j["regions"] = s.regions_total;
    j["bounded"] = s.regions_bounded;
    j["unbounded"] = s.regions_unbounded;
    j["max"] = max_orderings(static_cast<int>(cfg.size()), 2).get_str();
  } else {
    throw UsageError("count-regions handles dim 1 and 2; use count-sphere for points on the sphere");
  }
  if (as_json) {
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "points " << cfg.size() << "  dim " << cfg.dimension() << "  field " << cfg.field_name() << '\n';
  if (cfg.dimension() == 2) {
    out << "lines " << j["lines"] << "  directions " << j["direction_classes"] << "  vertices "
        << histogram_text(a_S(cfg).multiplicity_histogram) << '\n';
    out << "bounded " << j["bounded"] << "  unbounded " << j["unbounded"] << '\n';
  } else {
    out << "midpoints " << j["midpoints"] << '\n';
  }
  out << "regions " << j["regions"] << "  (max " << j["max"].get<std::string>() << ")\n";
  return kExitOk;
}

int cmd_count_sphere(const std::string& path, bool as_json, std::istream& in, std::ostream& out) {
  const PointConfig cfg = load(path, in);
  json j;
  j["points"] = cfg.size();
  if (cfg.dimension() == 3) {
    if (!cfg.on_sphere()) throw InputError("3-D configuration is not marked sphere=1");
    const SphereCount s = sphere_count(cfg);
    j["circles"] = s.circle_count;
    j["vertex_pairs_by_multiplicity"] = histogram_json(s.multiplicity_histogram);
    j["regions"] = s.regions_total;
  } else if (cfg.dimension() == 2) {
    if (!cfg.is_rational()) throw UsageError("plane-to-sphere needs rational coordinates");
    const PlanarSummary p = a_S(cfg);
    const long long via = plane_to_sphere_count(cfg);
    const auto direct = sphere_arrangement_of(embed_on_hemisphere(cfg.rational_2d()));
    j["planar_unbounded"] = p.regions_unbounded;
    j["planar_bounded"] = p.regions_bounded;
    j["regions"] = via;
    j["regions_direct"] = direct.regions_total;
    j["circles"] = direct.circle_count;
  } else {
    throw UsageError("count-sphere needs a sphere (dim 3) or planar (dim 2) configuration");
  }
  j["max"] = sphere_max(static_cast<int>(std::max<std::size_t>(cfg.size(), 1))).get_str();
  if (as_json) {
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "points " << cfg.size() << "  circles " << j["circles"] << '\n';
  if (cfg.dimension() == 2) {
    out << "u+2b = " << j["planar_unbounded"] << " + 2*" << j["planar_bounded"] << "  direct " << j["regions_direct"]
        << '\n';
  } else {
    out << "vertex pairs " << histogram_text(sphere_count(cfg).multiplicity_histogram) << '\n';
  }
  out << "regions " << j["regions"] << "  (max " << j["max"].get<std::string>() << ")\n";
  if (cfg.dimension() == 2 && j["regions"] != j["regions_direct"]) return kExitFailed;
  return kExitOk;
}

int cmd_ordering(const std::string& path, const std::string& at, const std::string& weights, std::istream& in,
                 std::ostream& out) {
  const PointConfig cfg = load(path, in);
  const auto v = parse_point(at, cfg.dimension());
  if (weights.empty()) {
    out << ordering_from_vantage(cfg, v).str() << '\n';
    return kExitOk;
  }
  const Weights w(parse_rationals(weights));
  out << ordering_weighted(cfg, v, w).str() << '\n';
  return kExitOk;
}

int cmd_two_vantage(const std::string& path, const std::string& at, const std::string& at2, std::uint64_t budget,
                    std::optional<std::uint64_t> seed, bool checks, bool list, int jobs, std::istream& in,
                    std::ostream& out) {
  const PointConfig cfg = load(path, in);
  if (!at.empty() || !at2.empty()) {
    if (at.empty() || at2.empty()) throw UsageError("give both --at and --at2");
    out << ordering_two_vantage(cfg, parse_point(at, cfg.dimension()), parse_point(at2, cfg.dimension())).str()
        << '\n';
    return kExitOk;
  }
  if (!seed) throw UsageError("sampling needs an explicit --seed");
  if (!cfg.is_rational()) throw UsageError("sampling needs rational coordinates");
  std::vector<Vec2<Rational>> pts;
  if (cfg.dimension() == 1) {
    pts = on_x_axis(cfg.rational_1d());
  } else if (cfg.dimension() == 2) {
    pts = cfg.rational_2d();
  } else {
    throw UsageError("two-vantage sampling works in the plane");
  }
  const auto s = sample_two_vantage_orderings(pts, budget, *seed, jobs);
  const int n = static_cast<int>(pts.size());
  out << "orderings " << s.orderings.size() << "  samples " << s.samples << "  tie samples " << s.tie_samples
      << "  exact rechecks " << s.exact_fallbacks << '\n';
  int status = kExitOk;
  const auto positions = collinear_positions(pts);
  if (checks) {
    if (positions.empty()) throw UsageError("--collinear-checks needs collinear points");
    long bad = 0;
    for (const auto& [ranks, first] : s.orderings) {
      const Ordering o = Ordering::strict(ranks);
      if (!contiguity_check(o, positions) || !is_velo_valid(updown(o, positions))) ++bad;
    }
    out << "2^(n-1) = " << two_vantage_line_bound(n) << "  c_n = " << velo_bound(n) << "  failing checks " << bad
        << '\n';
    if (bad || BigInt(static_cast<long>(s.orderings.size())) > velo_bound(n)) status = kExitFailed;
  }
  if (list) {
    for (const auto& [ranks, first] : s.orderings) {
      const Ordering o = Ordering::strict(ranks);
      out << o.str();
      if (!positions.empty()) out << "  " << updown(o, positions);
      out << '\n';
    }
  }
  return status;
}

struct ConstructArgs {
  std::string kind;
  std::optional<int> n, k, l, m;
  std::optional<long> t;
  std::string name;
  std::optional<std::uint64_t> seed;
  bool sphere = false;
  std::string output;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const std::string kind = normalize_kind(a.kind);
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError("construct " + a.kind + " needs " + flag);
    return *v;
  };
  auto seed = [&] {
    if (!a.seed) throw UsageError("construct " + a.kind + " is randomized and needs an explicit --seed");
    return *a.seed;
  };
  PointConfig cfg;
  if (kind == "equallyspaced") {
    cfg = PointConfig::from_rational_1d(equally_spaced_line(need(a.n, "-n")));
  } else if (kind == "gap1d") {
    cfg = PointConfig::from_rational_1d(gap_config_1d(need(a.n, "-n"), need(a.k, "-k")));
  } else if (kind == "free") {
    const int n = need(a.n, "-n");
    cfg = a.sphere ? to_config(free_sphere_config(n, seed(), false)) : to_config(free_config(n, seed()));
  } else if (kind == "freesum" || kind == "nearmax") {
    cfg = to_config(near_max_config(need(a.n, "-n"), a.k.value_or(0), seed()));
  } else if (kind == "trapezoid") {
    cfg = to_config(trapezoid_gadget(need(a.k, "-k"), seed()));
  } else if (kind == "parallellines") {
    cfg = to_config(parallel_lines_gadget(a.m.value_or(0), need(a.k, "-k"), need(a.l, "-l"), seed()));
  } else if (kind == "circlegadget") {
    cfg = to_config(circle_gadget(need(a.n, "-n"), need(a.k, "-k"), seed()));
  } else if (kind == "concyclic") {
    const int n = need(a.n, "-n");
    if (a.t) {
      const auto lifted = to_rational(lift_circle_to_sphere(concyclic_with_bisectors(n, *a.t)));
      if (!lifted) throw UsageError("this (n, t) needs cyclotomic coordinates, which the file format cannot hold");
      cfg = to_config(*lifted);
    } else {
      cfg = concyclic_equal(n);
      if (a.sphere) {
        std::vector<PointConfig::Point> pts;
        for (const auto& p : cfg.points()) {
          pts.push_back({p[0] * QuadExt(Rational(3, 5)), p[1] * QuadExt(Rational(3, 5)), QuadExt(Rational(4, 5))});
        }
        cfg = PointConfig(3, std::move(pts), true, cfg.radicand());
      }
    }
  } else if (kind == "platonic") {
    if (a.name.empty()) throw UsageError("construct platonic needs --name");
    cfg = platonic(a.name);
  } else if (kind == "doubled") {
    cfg = to_config(doubled(free_sphere_config(need(a.n, "-n"), seed(), true)));
  } else {
    throw UsageError("unknown construction '" + a.kind + "'");
  }
  emit(cfg, a.output, out);
  return kExitOk;
}

int cmd_formula(const std::vector<std::string>& args, bool csv, int from, int to, std::ostream& out) {
  if (args.empty() || args[0] == "list") {
    for (const auto& f : formula_catalog()) out << f.usage << '\n';
    out << "table            Max/Min/sphere/two-vantage bounds for n in [--from, --to]\n";
    return kExitOk;
  }
  if (args[0] == "table") {
    std::vector<std::vector<std::string>> rows;
    for (int n = from; n <= to; ++n) {
      rows.push_back({std::to_string(n), max_orderings(n, 1).get_str(), min_orderings(n).get_str(),
                      max_orderings(n, 2).get_str(), max_orderings(n, 3).get_str(), sphere_min(n).get_str(),
                      sphere_max(n).get_str(), two_vantage_line_bound(n).get_str(), velo_bound(n).get_str()});
    }
    print_table({"n", "max1", "min", "max2", "max3", "sphere_min", "sphere_max", "2^(n-1)", "c_n"}, rows, csv, out);
    return kExitOk;
  }
  std::vector<long> nums;
  for (std::size_t i = 1; i < args.size(); ++i) {
    try {
      std::size_t used = 0;
      nums.push_back(std::stol(args[i], &used));
      if (used != args[i].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("formula argument '" + args[i] + "' is not an integer");
    }
  }
  try {
    out << formula_by_name(args[0], nums) << '\n';
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int cmd_search(int n, std::uint64_t budget, std::optional<std::uint64_t> seed, const std::string& store,
               bool structured, int max_den, bool as_json, int jobs, std::ostream& out) {
  if (!seed) throw UsageError("search-achievable needs an explicit --seed");
  SearchOptions opts;
  opts.budget = budget;
  opts.seed = *seed;
  opts.structured = structured;
  opts.max_den = max_den;
  opts.jobs = jobs;
  const SearchRun run = search_achievable(n, opts);
  const Coverage cov = coverage_report(run);
  const auto missing = missing_counts(run);
  std::size_t stored = 0;
  if (!store.empty()) stored = append_to_store(store, run);
  if (as_json) {
    json j;
    j["n"] = n;
    j["seed"] = *seed;
    j["budget"] = budget;
    std::vector<long long> got;
    json strategies = json::object();
    for (const auto& [k, w] : run.achieved) {
      got.push_back(k);
      strategies[std::to_string(k)] = w.strategy;
    }
    j["achieved"] = got;
    j["strategies"] = strategies;
    j["missing"] = missing;
    j["coverage"] = cov.percentage_text;
    j["seconds"] = run.seconds;
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "n " << n << "  range [" << cov.min << ", " << cov.max << "]  achieved " << cov.achieved << "/"
      << cov.interval << " = " << cov.percentage_text << "\n";
  out << "achieved:";
  for (const auto& [k, w] : run.achieved) out << ' ' << k;
  out << "\nmissing:";
  for (long long k : missing) out << ' ' << k;
  out << "\nstructured candidates " << run.structured_candidates << "  random samples " << run.samples << "  "
      << std::fixed << std::setprecision(2) << run.seconds << " s\n";
  if (!store.empty()) out << "stored " << stored << " new witnesses in " << store << '\n';
  return kExitOk;
}

int cmd_report(const std::string& store, bool csv, std::ostream& out) {
  StoreReport rep;
  try {
    rep = verify_witness_store(store);
  } catch (const std::exception& e) {
    throw InputError(store + ": " + e.what());
  }
  std::vector<int> sizes;
  const auto table = table_from_store(store, sizes);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& c = table[i];
    rows.push_back({std::to_string(sizes[i]), std::to_string(c.min), std::to_string(c.max),
                    std::to_string(c.achieved), std::to_string(c.interval), c.percentage_text});
  }
  print_table({"n", "min", "max", "achieved", "interval", "percent"}, rows, csv, out);
  if (!csv) out << rep.records << " records, " << rep.mismatches.size() << " failing re-verification\n";
  for (const auto& m : rep.mismatches) out << "  " << m << '\n';
  return rep.mismatches.empty() ? kExitOk : kExitFailed;
}

int cmd_platonic_table(bool csv, std::ostream& out) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& name : platonic_names()) {
    const PointConfig cfg = platonic(name);
    const int n = static_cast<int>(cfg.size());
    const SphereCount s = sphere_count(cfg);
    rows.push_back({std::to_string(n), std::to_string(sphere_min_witness(n).count), name, std::to_string(s.circle_count),
                    std::to_string(s.regions_total), sphere_max(n).get_str()});
  }
  print_table({"n", "min", "solid", "circles", "regions", "max"}, rows, csv, out);
  return kExitOk;
}

int cmd_verify(const std::vector<int>& only, bool verbose, int jobs, std::ostream& out) {
  AcceptanceOptions opts;
  opts.only = std::set<int>(only.begin(), only.end());
  opts.jobs = jobs;
  opts.verbose = verbose;
  const auto results = run_acceptance(opts, out);
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<long>(results.size()) ? kExitOk : kExitFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of distance orderings for point sets on a line, in the plane and on the sphere.",
               "vantage"};
  app.require_subcommand(1);
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--jobs,-j", jobs, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);

  std::string path;
  bool as_json = false;
  auto* count = app.add_subcommand("count-regions", "regions cut out by the bisectors (dim 1: midpoints)");
  count->add_option("file", path, "configuration file, '-' or omitted for stdin");
  count->add_flag("--json", as_json, "one JSON object");

  auto* sphere = app.add_subcommand("count-sphere", "regions cut by the bisecting great circles");
  sphere->add_option("file", path, "sphere configuration, or a planar one to map onto a hemisphere");
  sphere->add_flag("--json", as_json, "one JSON object");

  std::string at, at2, weights;
  auto* ord = app.add_subcommand("ordering", "distance ordering seen from one vantage point");
  ord->add_option("file", path);
  ord->add_option("--at", at, "vantage point, e.g. \"1/2 3\"")->required();
  ord->add_option("--weights", weights, "positive per-axis weights");

  std::uint64_t budget = 1000000;
  std::optional<std::uint64_t> seed;
  bool checks = false, list = false;
  auto* two = app.add_subcommand("two-vantage", "orderings by summed distance to two vantage points");
  two->add_option("file", path);
  two->add_option("--at", at, "first vantage point");
  two->add_option("--at2", at2, "second vantage point");
  two->add_option("--budget", budget, "samples when no vantage points are given");
  two->add_option("--seed", seed);
  two->add_flag("--collinear-checks", checks, "contiguity and up-down checks for collinear points");
  two->add_flag("--list", list, "print every sampled ordering");

  ConstructArgs ca;
  auto* con = app.add_subcommand("construct", "build a configuration");
  con->add_option("kind", ca.kind,
                  "equally_spaced | gap_1d | free | free_sum | trapezoid | parallel_lines | circle_gadget | "
                  "concyclic | platonic | doubled")
      ->required();
  con->add_option("-n", ca.n);
  con->add_option("-k", ca.k);
  con->add_option("-l", ca.l);
  con->add_option("-m", ca.m);
  con->add_option("-t", ca.t);
  con->add_option("--name", ca.name, "platonic solid");
  con->add_option("--seed", ca.seed);
  con->add_flag("--sphere", ca.sphere, "free/concyclic: place the points on the sphere");
  con->add_option("-o,--output", ca.output, "file to write (default stdout)");

  std::vector<std::string> fargs;
  bool csv = false;
  int from = 1, to = 12;
  auto* form = app.add_subcommand("formula", "closed-form counts; 'formula list' for names");
  form->add_option("args", fargs, "NAME ARGS... | list | table");
  form->add_flag("--csv", csv);
  form->add_option("--from", from)->check(CLI::PositiveNumber);
  form->add_option("--to", to)->check(CLI::PositiveNumber);

  int n = 0;
  std::string store;
  bool no_structured = false;
  int max_den = 1;
  std::uint64_t search_budget = 100000;
  auto* search = app.add_subcommand("search-achievable", "randomized search for achievable planar counts");
  search->add_option("-n", n)->required()->check(CLI::Range(2, 15));
  search->add_option("--budget", search_budget);
  search->add_option("--seed", seed);
  search->add_option("--store", store, "append new witnesses to this JSONL file");
  search->add_flag("--no-structured", no_structured, "random samples only");
  search->add_option("--max-den", max_den)->check(CLI::PositiveNumber);
  search->add_flag("--json", as_json);

  auto* report = app.add_subcommand("report", "re-verify a witness store and tabulate coverage");
  report->add_option("--store", store)->required();
  report->add_flag("--csv", csv);

  auto* plato = app.add_subcommand("platonic-table", "counts for the five Platonic solids");
  plato->add_flag("--csv", csv);

  std::vector<int> only;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--only", only, "criterion numbers")->delimiter(',')->check(CLI::Range(1, 10));
  verify->add_flag("--verbose,-v", verbose);

  if (argc > 1) {
    const std::string first = argv[1];
    if (!first.empty() && first[0] != '-' && std::find(kSubcommands.begin(), kSubcommands.end(), first) == kSubcommands.end()) {
      err << "vantage: unknown subcommand '" << first << "'\n";
      return kExitUsage;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "vantage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count_regions(path, as_json, in, out);
    if (*sphere) return cmd_count_sphere(path, as_json, in, out);
    if (*ord) return cmd_ordering(path, at, weights, in, out);
    if (*two) return cmd_two_vantage(path, at, at2, budget, seed, checks, list, jobs, in, out);
    if (*con) return cmd_construct(ca, out);
    if (*form) return cmd_formula(fargs, csv, from, to, out);
    if (*search) return cmd_search(n, search_budget, seed, store, !no_structured, max_den, as_json, jobs, out);
    if (*report) return cmd_report(store, csv, out);
    if (*plato) return cmd_platonic_table(csv, out);
    if (*verify) return cmd_verify(only, verbose, jobs, out);
  } catch (const InputError& e) {
    err << "vantage: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const BudgetExhausted& e) {
    err << "vantage: " << e.what() << '\n';
    return kExitExhausted;
  } catch (const UsageError& e) {
    err << "vantage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "vantage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "vantage: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace vantage::cli
