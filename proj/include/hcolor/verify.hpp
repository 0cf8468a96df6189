#pragma once

// The acceptance battery. Each criterion is deterministic given the seed and
// its report text carries no timings, so two runs compare byte for byte.

#include <cstdint>
#include <string>
#include <vector>

#include "hcolor/io.hpp"

namespace hcolor {

struct VerifyOptions {
  std::uint64_t seed = 20190101;
  /// Lowers the n = 3 exact entry F(7) to 2 before building tables; the
  /// soundness spot-test must then fail.
  bool corrupt_seed_table = false;
  /// Groups to run; empty runs everything. See verification_groups().
  std::vector<std::string> only;
};

struct CriterionResult {
  int id = 0;
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// bounds, exact, chains, colorers, determinism
const std::vector<std::string>& verification_groups();

std::vector<CriterionResult> run_verification(const VerifyOptions& options);

/// One "PASS|FAIL [id] group: name -- detail" line per criterion.
std::string format_report(const std::vector<CriterionResult>& results);
Json to_json(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace hcolor
