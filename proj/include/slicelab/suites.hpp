#pragma once

// Randomized verification campaigns. Each suite runs a fixed number of
// trials per coroot interval and records every counterexample with the JSON
// inputs that reproduce it.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "slicelab/zastava.hpp"

namespace slicelab {

struct FailureRecord {
  long trial = 0;
  std::string alpha;
  std::string stage;
  nlohmann::json inputs;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::vector<CorootInterval> alphas;
  long requested = 0;
  long completed = 0;
  long rejected = 0;
  /// Resampling events by cause; a trial may resample several times before
  /// it completes.
  std::map<std::string, long> resamples;
  std::vector<FailureRecord> failures;
  /// Suite-specific observations (exploratory suites only report here).
  nlohmann::json notes = nlohmann::json::object();
  bool exploratory = false;
  bool internal_breach = false;
  double wall_seconds = 0;
};

const std::vector<std::string>& suite_names();

/// Throws InvalidArgument on an unknown suite, n outside [2, 6] or trials < 1.
SuiteReport run_suite(const std::string& name, int n, int trials, std::uint64_t seed);

nlohmann::json report_to_json(const SuiteReport& r, bool with_wall_time = true);

}  // namespace slicelab
