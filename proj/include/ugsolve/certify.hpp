#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "ugsolve/instance.hpp"
#include "ugsolve/rng.hpp"

namespace ugsolve {

using Triangle = std::array<Vertex, 3>;

/// Edge-disjoint inconsistent triangles. Every inconsistent triangle forces
/// at least one deleted edge and disjointness makes those deletions
/// distinct, so size() is a lower bound on the optimum.
struct PackingCertificate {
  std::vector<Triangle> triangles;
  std::uint64_t seed = 0;

  std::uint64_t lower_bound() const { return triangles.size(); }
};

/// Number of unsatisfiable triangles with all three edges present.
std::uint64_t inconsistent_triangles(const AnyInstance& g);

/// Calls f(u, v, w), u < v < w, for each inconsistent triangle.
void for_each_inconsistent_triangle(const AnyInstance& g,
                                    const std::function<void(Vertex, Vertex, Vertex)>& f);

/// Greedy maximal packing, scanning triples in a seeded random vertex order.
PackingCertificate triangle_packing_lb(const AnyInstance& g, Rng& rng);

/// True iff every triangle is present and inconsistent and no edge repeats.
bool verify_certificate(const AnyInstance& g, const PackingCertificate& cert);

/// eps = OPT/m and the matching nu for the voting analysis.
struct GuaranteeBound {
  double eps = 0.0;
  double nu = 0.0;
  double delta = 0.0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;

  /// nu = 2 / (1 - 2 eps); throws OutOfRegime unless eps < 1/2.
  static GuaranteeBound complete(std::uint64_t opt_val, std::uint64_t n, std::uint64_t m);
  /// nu = 2 / (1 - 2 eps - 2 delta); throws OutOfRegime unless positive.
  static GuaranteeBound dense(std::uint64_t opt_val, std::uint64_t n, std::uint64_t m,
                              double delta);
};

/// Largest excess VAL - OPT the complete-graph voting analysis permits:
/// OPT * 2 eps nu (2 + nu) (1 + 1/(n-1)).
double voting_bound(std::uint64_t opt_val, std::uint64_t n, std::uint64_t m);

/// Dense analogue: OPT * 2 eps nu (2 + nu) / (1 - delta) + eps^2 nu^2 n.
double dense_voting_bound(std::uint64_t opt_val, std::uint64_t n, std::uint64_t m,
                          double delta);

/// The complete-graph excess with eps doubled (single random pivot):
/// OPT * 2 (2 eps) nu' (2 + nu') (1 + 1/(n-1)), nu' = 2 / (1 - 4 eps).
/// Throws OutOfRegime unless eps < 1/4.
double randomized_voting_bound(std::uint64_t opt_val, std::uint64_t n, std::uint64_t m);

}  // namespace ugsolve
