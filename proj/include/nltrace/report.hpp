#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace nltrace {

using Json = nlohmann::json;

/// Outcome of a property run, falsification search or invariant check.
struct Report {
  std::string suite;
  std::uint64_t trials = 0;
  bool passed = true;
  /// Worst observed ratio (or slack, see `metric`) over all trials.
  double worst = 0.0;
  std::string metric = "ratio";
  /// Replayable inputs of the failing trial, or of the worst trial on a pass.
  Json witness;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;

  /// elapsed_ms is left out unless requested so that equal runs serialize to
  /// equal bytes.
  Json to_json(bool include_timing = false) const;
};

}  // namespace nltrace
