#pragma once

#include <chrono>
#include <string>

#include "kernel.hpp"
#include "ugsolve/error.hpp"
#include "ugsolve/report.hpp"

namespace ugsolve::detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::duration<double> elapsed() const {
    return std::chrono::steady_clock::now() - start_;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Report for candidate index = pivot * labels_per_pivot + label.
inline SolveReport candidate_report(std::string algorithm, Candidate&& c,
                                    std::size_t labels_per_pivot) {
  SolveReport r;
  r.algorithm = std::move(algorithm);
  r.violated = c.violated;
  r.pivot = static_cast<Vertex>(c.index / labels_per_pivot);
  r.pivot_label = static_cast<Label>(c.index % labels_per_pivot);
  r.assignment = Assignment(std::move(c.labels));
  return r;
}

inline void check_pivot(std::uint32_t n, Label q, Vertex pivot, Label pivot_label) {
  if (pivot >= n) throw InvalidArgument("pivot " + std::to_string(pivot) + " out of range");
  if (pivot_label >= q) {
    throw InvalidArgument("pivot label " + std::to_string(pivot_label) + " out of range");
  }
}

inline void check_cyclic_label(Label pivot_label) {
  if (pivot_label != 0) {
    throw InvalidArgument("cyclic instances take pivot label 0 (shift symmetry)");
  }
}

}  // namespace ugsolve::detail
