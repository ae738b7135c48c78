#pragma once

// One-shot oracle suite behind `pq verify`.  Each check compares library
// results with exhaustive brute force over small instances.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "pq/enumeration.hpp"

namespace pq {

struct VerifyOptions {
  // Upper bound on the size parameter of the per-module property checks.
  // The numbered criteria always run at their own fixed ranges.
  std::size_t n = 5;
  OracleCaps caps;
  std::uint64_t seed = 7;
};

struct CheckResult {
  std::string id;     // "C1".."C12" for the criteria, "module.name" otherwise
  std::string title;
  bool passed = false;
  std::string detail;

  nlohmann::json to_json() const;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

}  // namespace pq
