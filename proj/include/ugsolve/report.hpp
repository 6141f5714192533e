#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ugsolve/types.hpp"

namespace ugsolve {

/// Result of one solver run. `violated` always equals
/// violated_count(instance, assignment).
struct SolveReport {
  Assignment assignment;
  std::uint64_t violated = 0;
  std::string algorithm;
  std::optional<Vertex> pivot;
  std::optional<Label> pivot_label;
  std::optional<std::uint64_t> seed;
  std::chrono::duration<double> elapsed{0.0};
  /// Algorithm-specific numbers (candidate values, threshold quantities).
  std::map<std::string, double> extras;
};

}  // namespace ugsolve
