#pragma once

#include <string>

#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

// Desk-scale resource caps; tunable through a key=value file named by
// --config or the SEMIRING_LAB_CONFIG environment variable.
struct Config {
  long congruence_cap = kDefaultCongruenceCap;
  int size_cap = kDefaultSizeCap;
  int max_monoid_order = 6;
  int max_semiring_order = 4;
  int conjecture_scan_order = 3;  // exhaustive order for the infinite-element scan
  int threads = 1;
};

// Lines of the form "key = value"; '#' starts a comment. Unknown keys are an
// error so typos do not silently fall back to defaults.
Config parse_config(const std::string& text);
Config load_config_file(const std::string& path);

// Defaults, overlaid by SEMIRING_LAB_CONFIG when set.
Config load_config_from_env();

}  // namespace semiring_lab
