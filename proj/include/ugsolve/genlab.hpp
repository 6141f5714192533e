#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "ugsolve/instance.hpp"
#include "ugsolve/rng.hpp"
#include "ugsolve/types.hpp"

namespace ugsolve {

enum class ConstraintKind { kCyclic, kPerm };

/// An instance built around a hidden assignment. Every edge outside
/// `corrupted` is satisfied by `planted`; every edge inside is violated.
struct PlantedInstance {
  std::variant<LinEqInstance, UgInstance> instance;
  Assignment planted;
  std::vector<Edge> corrupted;
};

/// Uniform planted labeling, then `num_corrupt` distinct uniform edges get a
/// uniformly chosen violating constraint.
PlantedInstance planted(std::uint32_t n, Label q, std::uint64_t num_corrupt,
                        ConstraintKind kind, Rng& rng);

/// Cyclic constraints; each edge is shifted by a uniform nonzero amount
/// with probability p_noise.
PlantedInstance noise_model(std::uint32_t n, Label q, double p_noise, Rng& rng);

/// Hamilton cycle i -> i+1 (mod n) with x_i - x_{i+1} = 1, every other
/// edge x_u - x_v = 0. Requires n >= 5 and q >= 2.
LinEqInstance tight_pivot_example(std::uint32_t n, Label q);

/// Removes edges in uniformly random order whenever both endpoints stay at
/// or above the degree floor ceil((1 - delta)(n - 1)).
DenseInstance sparsify_everywhere_dense(const DenseInstance::Base& base, double delta,
                                        Rng& rng);

/// Complete graph with a +/- sign on every edge.
class SignedGraph {
 public:
  /// `negative` has one flag per pair in pair_index() order.
  SignedGraph(std::uint32_t n, std::vector<std::uint8_t> negative);

  static SignedGraph random(std::uint32_t n, double p_minus, Rng& rng);

  std::uint32_t n() const { return n_; }
  bool negative(Vertex u, Vertex v) const {
    return u < v ? negative_[pair_index(n_, u, v)] != 0 : negative_[pair_index(n_, v, u)] != 0;
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint8_t> negative_;
};

/// Disagreements of a two-clustering: + edges across, - edges within.
std::uint64_t mindisagree2_cost(const SignedGraph& h, std::span<const std::uint8_t> side);

/// Exhaustive best two-clustering (vertex 0 on side 0). n <= 24.
std::pair<std::uint64_t, std::vector<std::uint8_t>> best_two_clustering(const SignedGraph& h);

/// q = 2 encoding: + edges get offset 0, - edges offset 1.
LinEqInstance reduce_mindisagree2(const SignedGraph& h);

struct PaddedInstance {
  UgInstance instance;
  Assignment intended;
};

/// Pads a signed graph with q - 2 groups of M vertices each (group i
/// follows the signed graph in index order, i = 2..q-1). The intended
/// labeling puts side[v] on graph vertices and i on group i; its cost is
/// mindisagree2_cost(h, side) + n M (q - 2) / 2. Requires q >= 3, M even
/// and positive.
PaddedInstance pad_to_ug(const SignedGraph& h, Label q, std::uint32_t M,
                         std::span<const std::uint8_t> side);

/// Band coefficient calibrated on the exhaustive l = 6, q = 3 gadget
/// (smallest value accepting at least 90% of seeds 1..20).
inline constexpr double kDefaultGadgetBeta = 0.885;

struct GadgetSpec {
  Label q = 2;
  std::uint32_t ell = 4;
  std::uint64_t seed = 0;
  double beta = kDefaultGadgetBeta;
  unsigned max_attempts = 64;

  /// Throws InvalidArgument unless ell % q == 0, ell > q, beta > 0.
  void validate() const;
};

struct GadgetReport {
  bool exhaustive = false;
  /// Satisfied-count extremes over every labeling (exhaustive) or over the
  /// sampled left labelings with best/worst right responses.
  std::uint64_t min_satisfied = 0;
  std::uint64_t max_satisfied = 0;
  /// Exhaustive only: total satisfied count summed over all q^(2 ell)
  /// labelings, and that number of labelings.
  std::uint64_t total_satisfied = 0;
  std::uint64_t labelings = 0;
  double band_lo = 0.0;
  double band_hi = 0.0;
  unsigned attempts = 0;
  bool passed = false;
};

/// Constraints x_{left i} - x_{right j} = offset(i, j) (mod q) on K_{ell,ell}.
struct BipartiteGadget {
  Label q = 2;
  std::uint32_t ell = 0;
  std::vector<Label> offsets;  // ell * ell, row = left vertex
  GadgetReport report;

  Label offset(std::uint32_t i, std::uint32_t j) const { return offsets[i * ell + j]; }
  std::uint64_t satisfied(std::span<const Label> left, std::span<const Label> right) const;
};

/// Uniform arc offsets, not validated.
BipartiteGadget sample_gadget(Label q, std::uint32_t ell, Rng& rng);

/// Extremes of the satisfied count: exact for ell <= 8, otherwise over 10^5
/// random left labelings each paired with the best and worst right labeling.
GadgetReport measure_gadget(const BipartiteGadget& gadget, double beta, Rng& rng);

/// Samples until the extremes fall inside ell^2/q +- beta ell^1.5. Throws
/// GenerationFailure (with the closest band reached) after max_attempts.
BipartiteGadget bipartite_gadget(const GadgetSpec& spec);

struct BlowupSpec {
  std::uint32_t k = 2;
  std::uint64_t seed = 0;
  double gadget_beta = kDefaultGadgetBeta;

  /// Throws InvalidArgument unless k >= 1 and k % q == 0.
  void validate(Label q) const;
};

/// Complete blow-up on n k vertices (vertex v's copy i is v * k + i):
/// cloud edges get offset 0, copies of present edges keep their offset,
/// and each absent edge's k x k block is a validated bipartite gadget.
/// The base must be cyclic.
LinEqInstance blow_up(const DenseInstance& g, const BlowupSpec& spec);

/// The same blow-up with the gadget blocks left out.
DenseInstance blow_up_star(const DenseInstance& g, const BlowupSpec& spec);

}  // namespace ugsolve
