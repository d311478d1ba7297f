#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vantage/cli.hpp"
#include "vantage/formulas.hpp"
#include "vantage/line_arrangement.hpp"
#include "vantage/point_config.hpp"
#include "vantage/search.hpp"

using namespace vantage;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "vantage");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "vantage_unit";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

}  // namespace

TEST_CASE("search witnesses re-verify and do not depend on the job count") {
  SearchOptions opt;
  opt.budget = 3000;
  opt.seed = 4;
  opt.block_size = 512;
  const SearchRun one = search_achievable(4, opt);
  opt.jobs = 3;
  const SearchRun three = search_achievable(4, opt);
  REQUIRE(one.achieved.size() == three.achieved.size());
  for (const auto& [k, w] : one.achieved) {
    REQUIRE(three.achieved.count(k) == 1);
    CHECK(three.achieved.at(k).points == w.points);
    CHECK(arrangement_of(w.points).regions_total == k);
    CHECK(k >= 6);
    CHECK(k <= 18);
  }
  CHECK(one.achieved.count(18) == 1);
  CHECK(one.achieved.count(6) == 1);
  const auto missing = missing_counts(one);
  CHECK(missing.size() + one.achieved.size() == 13);
  for (long long m : missing) CHECK(one.achieved.count(m) == 0);
}

TEST_CASE("coverage arithmetic") {
  const Coverage c = coverage_report(4, {6, 8, 10, 12, 14, 16, 17, 18});
  CHECK(c.min == 6);
  CHECK(c.max == 18);
  CHECK(c.interval == 13);
  CHECK(c.achieved == 8);
  CHECK(c.percentage_text == "61.54%");
  CHECK(coverage_report(3, {4, 6}).percentage_text == "66.67%");
  CHECK_THROWS(coverage_report(4, {}));
}

TEST_CASE("witness store round trip") {
  const fs::path store = scratch("store.jsonl");
  SearchOptions opt;
  opt.budget = 500;
  opt.seed = 9;
  const SearchRun run = search_achievable(3, opt);
  const std::size_t written = append_to_store(store.string(), run);
  CHECK(written == run.achieved.size());
  CHECK(append_to_store(store.string(), run) == 0);  // keys already present
  const auto records = read_store(store.string());
  REQUIRE(records.size() == written);
  for (const auto& r : records) {
    CHECK(r.n == 3);
    CHECK(a_S(PointConfig::parse(r.config)).regions_total == r.k);
  }
  CHECK(verify_witness_store(store.string()).mismatches.empty());

  // A record whose count no longer matches is reported.
  std::string text;
  {
    std::ifstream f(store);
    std::getline(f, text);
  }
  const auto pos = text.find("\"k\":");
  REQUIRE(pos != std::string::npos);
  const fs::path broken = scratch("broken.jsonl");
  std::ofstream(broken) << text.substr(0, pos) << "\"k\":999," << text.substr(text.find(',', pos) + 1) << "\n";
  CHECK(verify_witness_store(broken.string()).mismatches.size() == 1);
}

TEST_CASE("cli formulas and counts") {
  auto r = run_cli({"formula", "max", "5", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "46\n");
  r = run_cli({"formula", "sphere-max", "12"});
  CHECK(r.out == "3852\n");
  CHECK(run_cli({"formula", "list"}).out.find("stirling") != std::string::npos);

  const auto gap = run_cli({"construct", "gap1d", "-n", "8", "-k", "20"});
  REQUIRE(gap.code == 0);
  r = run_cli({"count-regions"}, gap.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("regions 20") != std::string::npos);
  r = run_cli({"count-regions", "--json"}, gap.out);
  CHECK(r.out.find("\"regions\":20") != std::string::npos);

  r = run_cli({"ordering", "--at", "3/2"}, "dim=1 field=Q sphere=0\n1\n2\n3\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("[1 2] 3") != std::string::npos);

  r = run_cli({"platonic-table", "--csv"});
  CHECK(r.out.find("tetrahedron") != std::string::npos);
}

TEST_CASE("cli construct round trip and sphere count") {
  const fs::path out = scratch("free.txt");
  auto r = run_cli({"construct", "free", "-n", "4", "--seed", "3", "-o", out.string()});
  REQUIRE(r.code == 0);
  const PointConfig c = PointConfig::read_file(out.string());
  CHECK(c.size() == 4);
  CHECK(a_S(c).regions_total == 18);
  r = run_cli({"count-sphere", out.string()});
  CHECK(r.out.find("regions 24") != std::string::npos);
  r = run_cli({"construct", "platonic", "--name", "cube"});
  REQUIRE(r.code == 0);
  CHECK(run_cli({"count-sphere"}, r.out).out.find("regions 96") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"construct", "free", "-n", "4"}).code == 2);  // randomized without --seed
  CHECK(run_cli({"count-regions"}, "junk\n").code == 3);
  CHECK(run_cli({"count-regions", (fs::temp_directory_path() / "vantage_unit" / "absent.txt").string()}).code == 3);
  CHECK(run_cli({"formula", "nope", "1"}).code == 2);
  CHECK(run_cli({"construct", "gap1d", "-n", "5", "-k", "3"}).code == 2);
  const auto r = run_cli({"formula", "max", "5", "2", "--bad-flag"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}
