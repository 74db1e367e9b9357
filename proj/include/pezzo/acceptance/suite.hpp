#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pezzo/hexagon/hexagon.hpp"

namespace pezzo::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string group;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no limit
  nlohmann::json details;

  /// Timing is left out so repeated runs serialize identically.
  nlohmann::json to_json() const;
  std::string line() const;
};

struct SuiteOptions {
  /// Group name (brauer, lattice, surface, proof, determinism) or empty for all.
  std::string filter;
  hexagon::TraceTable trace_table = hexagon::trace_table();
};

std::vector<std::string> groups();
std::vector<CriterionResult> run_suite(const SuiteOptions& options = {});
nlohmann::json suite_json(const std::vector<CriterionResult>& results);

}  // namespace pezzo::acceptance
