#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fewbody/serialize.hpp"

namespace fewbody {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  int checks = 0;                     // individual exact/numeric comparisons made
  std::vector<std::string> failures;  // one line per failing claim (aggregated)
  double seconds = 0;
  double budget = 0;                  // runtime limit in seconds, 0 when none
  json data;                          // key values behind the verdict
};

inline constexpr int kCriterionCount = 9;

/// Runs acceptance criterion `id` (1..9) with draws derived from `seed`.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Runs the given criteria concurrently; results come back in the order asked.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, std::uint64_t seed);

/// Report entry without the timing, so reports are reproducible byte for byte.
json to_json(const CriterionResult& r);

}  // namespace fewbody
