#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace vantage {

struct CriterionResult {
  int id = 0;
  std::string title;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> failures;  // empty on success
  std::vector<std::string> info;

  bool passed() const { return failures.empty() && seconds <= limit_seconds; }
};

struct AcceptanceOptions {
  std::set<int> only;  // empty means all ten
  int jobs = 1;
  bool verbose = false;
};

/// Runs the end-to-end checks and writes one line per criterion to `out`.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out);

}  // namespace vantage
