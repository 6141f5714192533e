#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ugsolve/genlab.hpp"
#include "ugsolve/instance.hpp"
#include "ugsolve/report.hpp"
#include "ugsolve/solvers.hpp"

namespace ugsolve {

/// Names accepted by run_algorithm.
const std::vector<std::string>& algorithm_names();

struct RunOptions {
  std::uint64_t seed = 0;
  double tau = 0.5;
  unsigned threads = 1;
  std::uint64_t brute_limit = kBruteForceLimit;
};

/// Dispatches one of algorithm_names() on any instance kind. dense-voting
/// accepts complete instances; the other heuristics reject dense ones with
/// NotApplicable.
SolveReport run_algorithm(std::string_view algorithm, const AnyInstance& g,
                          const RunOptions& opts);

enum class BenchFamily { kPlanted, kTight };

/// Cartesian sweep. One cell per (n, q, delta, corruption, seed index); every
/// algorithm runs on the cell's instance. Corruptions are fractions of m.
struct BenchConfig {
  BenchFamily family = BenchFamily::kPlanted;
  ConstraintKind kind = ConstraintKind::kCyclic;
  std::vector<std::uint32_t> ns;
  std::vector<Label> qs;
  std::vector<double> deltas{0.0};
  std::vector<double> corruptions{0.0};
  std::uint32_t seeds = 1;
  std::uint64_t root_seed = 0;
  std::vector<std::string> algorithms;
  double tau = 0.5;
  std::uint64_t brute_limit = kBruteForceLimit;
  /// Cells evaluated concurrently; 0 picks hardware concurrency.
  unsigned threads = 1;

  void validate() const;
};

struct BenchRow {
  std::string algorithm;
  std::uint32_t n = 0;
  Label q = 0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t corruptions = 0;
  std::uint64_t opt_or_lb = 0;
  bool opt_exact = false;
  std::optional<std::uint64_t> val;
  double elapsed_ms = 0.0;
  std::string error;

  /// val / opt_or_lb; 1 when both are 0.
  std::optional<double> ratio() const;
};

inline constexpr std::string_view kBenchHeader =
    "algorithm,n,q,delta,seed,corruptions,opt_or_lb,opt_exact,val,ratio,elapsed_ms,error";

/// Rows in cell order, algorithms in configured order. Per-cell seeds are
/// derive_seed(root_seed, cell index), so the result (timings aside) does not
/// depend on the thread count. A failing algorithm fills `error` and the
/// sweep continues.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
void write_bench_row(std::ostream& out, const BenchRow& row);

/// Reads UGSOLVE_THREADS (0 or unset means hardware concurrency).
unsigned threads_from_env();

}  // namespace ugsolve
