#pragma once

#include <cstdint>

#include "ugsolve/error.hpp"
#include "ugsolve/instance.hpp"
#include "ugsolve/types.hpp"

namespace ugsolve {

/// Number of present edges whose constraint `a` violates.
std::uint64_t violated_count(const LinEqInstance& g, const Assignment& a);
std::uint64_t violated_count(const UgInstance& g, const Assignment& a);
std::uint64_t violated_count(const DenseInstance& g, const Assignment& a);
std::uint64_t violated_count(const AnyInstance& g, const Assignment& a);

std::uint64_t satisfied_count(const AnyInstance& g, const Assignment& a);

/// True iff the triangle has a labeling satisfying all three edges. For
/// cyclic constraints this means the oriented offsets sum to 0; for
/// permutations, the composed map around the cycle has a fixed point.
bool triangle_consistent(const LinEqInstance& g, Vertex u, Vertex v, Vertex w);
bool triangle_consistent(const UgInstance& g, Vertex u, Vertex v, Vertex w);
/// Throws NotApplicable if one of the three edges is absent.
bool triangle_consistent(const DenseInstance& g, Vertex u, Vertex v, Vertex w);

/// The squared instance: c'_uv is the most frequent value of
/// (c_uw + c_wv) mod q over w outside {u, v}; ties go to the smallest value.
/// Cost O(n^3 + n^2 q). Requires n >= 3.
LinEqInstance to_square_instance(const LinEqInstance& g);

std::uint64_t num_edges(const AnyInstance& g);
std::uint32_t num_vertices(const AnyInstance& g);
Label alphabet_size(const AnyInstance& g);

}  // namespace ugsolve
