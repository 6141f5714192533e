#pragma once

#include <cstdint>

#include "ugsolve/instance.hpp"
#include "ugsolve/report.hpp"
#include "ugsolve/rng.hpp"
#include "ugsolve/solvers.hpp"

namespace ugsolve {

/// Random-order greedy for the complementary (max) problem. Each restart
/// visits the vertices in a fresh random order and gives each vertex the
/// label agreeing with the most already-placed neighbours (ties to the
/// smallest label). The first vertex gets label 0 on cyclic instances; on
/// permutation instances every start label is tried. Returns the restart
/// with the fewest violations.
SolveReport greedy_max(const LinEqInstance& g, Rng& rng, unsigned restarts = 1);
SolveReport greedy_max(const UgInstance& g, Rng& rng, unsigned restarts = 1);

struct PtasConfig {
  double tau = 0.5;
  std::uint64_t seed = 0;
  unsigned greedy_restarts = 5;
  SolverOptions solver;

  /// Throws InvalidArgument unless tau > 0 and greedy_restarts >= 1.
  void validate() const;
};

/// Runs voting and greedy_max and keeps the one with fewer violations
/// (voting on ties). `extras` records both values, eps_hat = VAL_voting/m,
/// nu_hat = 2/(1 - 2 eps_hat), whether 2 nu_hat (2 + nu_hat) eps_hat < tau,
/// and tau' = tau^2/32.
SolveReport ptas_solve(const LinEqInstance& g, const PtasConfig& cfg);
SolveReport ptas_solve(const UgInstance& g, const PtasConfig& cfg);

}  // namespace ugsolve
