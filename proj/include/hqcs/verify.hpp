#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hqcs::verify {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  nlohmann::json detail;
  double seconds = 0;
};

struct Options {
  /// Run a single named check.
  std::optional<std::string> only;
  /// Overrides the seed count of the seed-driven checks (weight,
  /// equivalence, memsched, constant-cycle). Unset means the full counts.
  std::optional<std::size_t> seeds;
};

/// Check names in criterion order: weight, equivalence, barrett, table,
/// complexity, ring, memsched, constant-cycle, hazard, determinism.
const std::vector<std::string>& check_names();

/// Throws std::invalid_argument for an unknown name.
CheckResult run_check(const std::string& name, const Options& opts = {});

std::vector<CheckResult> run_checks(const Options& opts = {});

nlohmann::json to_json(const CheckResult& r);

}  // namespace hqcs::verify
