#pragma once

// Seeded verification campaigns over a model: per trial a windowed
// intersection check of a random apartment pair, the growth verifier on a
// retracted segment toward both germs, and the +infinity / -infinity
// separation check on the same segment.

#include "masure/json_io.hpp"

#include <cstdint>
#include <string>

namespace masure::campaign {

struct ModelSpec {
  std::string kind = "tree";  // "tree" or "sl3"
  int q = 2;
  long precision = 40;  // sl3 only
};

struct CampaignConfig {
  ModelSpec model;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  long window_radius = 8;
  int complexity = 2;
  long height_bound = 4;
  std::size_t length_bound = 8;
  std::size_t enlargements = 2;  // re-runs with doubled radius after WindowTooSmall
  std::size_t samples = 16;      // segment sample points in the separation check
  std::string output;
};

/// ConfigError on unknown keys, missing model or out-of-range values.
CampaignConfig parse_config(const json::json& j);
json::json encode(const CampaignConfig& c);

enum class Execution { Serial, Parallel };

/// The full report. Identical configs give identical JSON regardless of
/// execution mode or thread count.
json::json run_campaign(const CampaignConfig& c, Execution mode);

/// 0 when no trial failed or was inconclusive, 1 on any FAIL, 3 when the only
/// non-passes are inconclusive.
int exit_status(const json::json& report);

}  // namespace masure::campaign
