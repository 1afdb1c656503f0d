#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "semiring_lab/config.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

struct SuiteItem {
  std::string description;
  std::string status;  // pass | fail | skipped
  std::string skip_reason;
  nlohmann::json witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteItem> items;
  double wall_seconds = 0.0;

  bool passed() const;
  nlohmann::json to_json() const;
};

// The named verification suites (classification results, closure properties,
// oracle sweeps) run at the configured desk-scale bounds.
std::vector<std::string> suite_ids();

SuiteReport run_suite(const std::string& id, const Config& cfg = Config{});

// The named semirings the property suites quantify over.
std::vector<std::pair<std::string, SemiringPtr>> suite_catalog(
    const Config& cfg = Config{});

}  // namespace semiring_lab
