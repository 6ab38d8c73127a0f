#pragma once

#include "quillen/json_io.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace quillen {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double budget = 0; // seconds
  std::vector<std::string> checks;   // every check that ran, in order
  std::vector<std::string> failures; // the ones that failed
};

struct SuiteOptions {
  /// Criteria to run; empty runs all nine.
  std::set<int> only;
  /// Corrupt the fixture of this criterion before checking it.
  std::optional<int> fault;
  std::uint64_t seed = 20240611;
};

struct SuiteReport {
  std::vector<CriterionResult> criteria;
  bool all_passed = false;
  double seconds = 0;
};

SuiteReport paper_suite(const SuiteOptions &opts = {});
Json suite_to_json(const SuiteReport &r);

/// Independent parity-based signature used by the suite as an oracle.
int signature_by_parity(const std::vector<unsigned> &entries);

} // namespace quillen
