#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vantage/constructions.hpp"

namespace vantage {

struct Witness {
  Planar points;
  std::string strategy;
  std::uint64_t index = 0;  // structured candidates first, then random samples
};

struct SearchOptions {
  std::uint64_t budget = 100000;  // random samples
  std::uint64_t seed = 1;
  bool structured = true;  // include constructed candidates
  bool random = true;
  int max_den = 1;         // coordinate denominators are drawn from 1..max_den
  int jobs = 1;
  std::uint64_t block_size = 4096;
};

struct SearchRun {
  int n = 0;
  SearchOptions options;
  std::map<long long, Witness> achieved;
  std::uint64_t structured_candidates = 0;
  std::uint64_t samples = 0;
  double seconds = 0;
};

/// Records every region count reached by structured constructions and random
/// small-box configurations of n points, each with one witness.
SearchRun search_achievable(int n, const SearchOptions& options);

struct Coverage {
  long long min = 0;
  long long max = 0;
  long long achieved = 0;
  long long interval = 0;  // M(n,2) - (2n-2) + 1
  double percentage = 0;
  std::string percentage_text;  // two decimals
};
Coverage coverage_report(const SearchRun& run);
Coverage coverage_report(int n, const std::vector<long long>& counts);

/// Counts in [2n-2, M(n,2)] missing from the run.
std::vector<long long> missing_counts(const SearchRun& run);

// ---- witness store: one JSON object per line ------------------------------

struct StoreRecord {
  int n = 0;
  long long k = 0;
  std::uint64_t seed = 0;
  std::string strategy;
  std::string config;  // configuration file text
};

/// Appends records for (n, k) keys not already in the store. Returns the number written.
std::size_t append_to_store(const std::string& path, const SearchRun& run);
std::vector<StoreRecord> read_store(const std::string& path);

struct StoreReport {
  std::size_t records = 0;
  std::vector<std::string> mismatches;  // human-readable, empty when all records re-verify
};
StoreReport verify_witness_store(const std::string& path);

/// Table rows (n, min, max, percentage) from the store contents.
std::vector<Coverage> table_from_store(const std::string& path, std::vector<int>& sizes);

}  // namespace vantage
