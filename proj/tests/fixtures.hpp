#pragma once

#include <numeric>
#include <span>
#include <vector>

#include "ugsolve/instance.hpp"
#include "ugsolve/rng.hpp"

namespace fixtures {

using namespace ugsolve;

inline LinEqInstance random_lineq(std::uint32_t n, Label q, Rng& rng) {
  return LinEqInstance::from_function(n, q, [&](Vertex, Vertex) { return rng.below(q); });
}

inline UgInstance random_ug(std::uint32_t n, Label q, Rng& rng) {
  std::vector<Label> perms;
  for (std::uint64_t e = 0; e < num_pairs(n); ++e) {
    std::vector<Label> p(q);
    std::iota(p.begin(), p.end(), Label{0});
    rng.shuffle(std::span<Label>(p));
    perms.insert(perms.end(), p.begin(), p.end());
  }
  return UgInstance(n, q, std::move(perms));
}

inline std::vector<Label> labels(const Assignment& a) {
  return {a.labels().begin(), a.labels().end()};
}

}  // namespace fixtures
