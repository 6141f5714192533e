#pragma once

#include <cstdint>
#include <vector>

#include "ugsolve/instance.hpp"
#include "ugsolve/report.hpp"
#include "ugsolve/rng.hpp"
#include "ugsolve/types.hpp"

namespace ugsolve {

struct SolverOptions {
  /// Worker threads for the pivot loop; 0 picks hardware concurrency.
  /// Results do not depend on this value.
  unsigned threads = 1;
};

// Pivot propagation: the pivot gets `pivot_label`, every other vertex the
// label its edge to the pivot forces. Cyclic instances accept label 0 only.
Assignment pivot_assign(const LinEqInstance& g, Vertex pivot, Label pivot_label = 0);
Assignment pivot_assign(const UgInstance& g, Vertex pivot, Label pivot_label);
/// Vertices not adjacent to the pivot get kUnlabeled.
std::vector<Label> pivot_assign(const DenseInstance& g, Vertex pivot, Label pivot_label);

/// Best pivot_assign over all pivots (and all pivot labels for permutation
/// constraints). Ties go to the smallest (pivot, label).
SolveReport pivot_best(const LinEqInstance& g, const SolverOptions& opts = {});
SolveReport pivot_best(const UgInstance& g, const SolverOptions& opts = {});

/// Pivot propagation on `candidates`, with each candidate scored on
/// `objective` (both on the same vertex set and alphabet). Running it on the
/// squared instance scored against the original reproduces voting_solve.
SolveReport pivot_best(const LinEqInstance& candidates, const LinEqInstance& objective,
                       const SolverOptions& opts = {});

SolveReport pivot_random(const LinEqInstance& g, Rng& rng);
SolveReport pivot_random(const UgInstance& g, Rng& rng);

/// One round of voting around a fixed pivot. Every vertex other than the
/// pivot takes the plurality of the votes cast by all vertices outside
/// {pivot, v}; the pivot keeps `pivot_label`. Requires n >= 3.
///
/// Plurality ties: permutation constraints take the smallest label. Cyclic
/// constraints take the label whose offset to the pivot, read in increasing
/// vertex order, is smallest; this matches the tie rule of
/// to_square_instance so that voting and pivoting on the squared instance
/// agree exactly.
Assignment voting_single(const LinEqInstance& g, Vertex pivot, Label pivot_label = 0);
Assignment voting_single(const UgInstance& g, Vertex pivot, Label pivot_label);

/// Best voting_single over all pivots (and labels for permutation
/// constraints). n = 2 falls back to pivot propagation.
SolveReport voting_solve(const LinEqInstance& g, const SolverOptions& opts = {});
SolveReport voting_solve(const UgInstance& g, const SolverOptions& opts = {});

/// voting_single around one uniformly drawn pivot; permutation constraints
/// still try every label on that pivot.
SolveReport randomized_voting(const LinEqInstance& g, Rng& rng);
SolveReport randomized_voting(const UgInstance& g, Rng& rng);

/// Voting on an everywhere-dense instance. Only neighbours of the pivot get
/// a temporary label; every labelled vertex, the pivot included, votes for
/// each neighbour. A vertex without votes keeps its temporary label, or
/// gets 0 if it has none.
SolveReport dense_voting(const DenseInstance& g, const SolverOptions& opts = {});

/// One dense voting round around a fixed pivot.
Assignment dense_voting_single(const DenseInstance& g, Vertex pivot, Label pivot_label);

inline constexpr std::uint64_t kBruteForceLimit = 100'000'000;

/// Exact minimum by exhaustive branch-and-bound. Returns the
/// lexicographically smallest optimal assignment. Cyclic instances fix
/// x_0 = 0 (search space q^(n-1)); permutation instances search q^n.
/// Throws ResourceLimit when the search space exceeds `limit`.
SolveReport brute_force(const LinEqInstance& g, std::uint64_t limit = kBruteForceLimit);
SolveReport brute_force(const UgInstance& g, std::uint64_t limit = kBruteForceLimit);
SolveReport brute_force(const DenseInstance& g, std::uint64_t limit = kBruteForceLimit);

/// Size of the brute-force search space, saturating at UINT64_MAX.
std::uint64_t brute_force_space(const AnyInstance& g);

/// Quantities from the voting analysis, computed for a known optimum.
struct VotingDiagnostics {
  Vertex pivot = 0;  // pivot with fewest incident red edges
  double eps = 0.0;
  double flippable_threshold = 0.0;
  std::uint32_t rogue = 0;
  std::uint32_t flippable = 0;
  double flippable_bound = 0.0;  // eps * nu * n
  /// Non-flippable vertices whose final label differs from the optimum.
  std::vector<Vertex> unflippable_flipped;
};

/// Runs voting around the analyzed pivot and checks the non-flippable
/// vertices against `optimum` (an optimal assignment). Complete instances,
/// eps < 1/2.
VotingDiagnostics voting_diagnostics(const LinEqInstance& g, const Assignment& optimum);
VotingDiagnostics voting_diagnostics(const UgInstance& g, const Assignment& optimum);

}  // namespace ugsolve
