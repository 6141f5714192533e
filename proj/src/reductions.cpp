#include <string>

#include "ugsolve/error.hpp"
#include "ugsolve/genlab.hpp"

namespace ugsolve {

SignedGraph::SignedGraph(std::uint32_t n, std::vector<std::uint8_t> negative)
    : n_(n), negative_(std::move(negative)) {
  if (n < 2) throw InvalidArgument("signed graph needs n >= 2");
  if (negative_.size() != num_pairs(n)) throw InvalidArgument("sign table has wrong size");
}

SignedGraph SignedGraph::random(std::uint32_t n, double p_minus, Rng& rng) {
  std::vector<std::uint8_t> negative(num_pairs(n));
  for (auto& s : negative) s = rng.bernoulli(p_minus) ? 1 : 0;
  return SignedGraph(n, std::move(negative));
}

std::uint64_t mindisagree2_cost(const SignedGraph& h, std::span<const std::uint8_t> side) {
  if (side.size() != h.n()) throw InvalidArgument("clustering size mismatch");
  std::uint64_t cost = 0;
  for (Vertex u = 0; u < h.n(); ++u) {
    for (Vertex v = u + 1; v < h.n(); ++v) {
      const bool same = side[u] == side[v];
      if (same == h.negative(u, v)) ++cost;
    }
  }
  return cost;
}

std::pair<std::uint64_t, std::vector<std::uint8_t>> best_two_clustering(const SignedGraph& h) {
  const std::uint32_t n = h.n();
  if (n > 24) throw ResourceLimit("best_two_clustering is limited to n <= 24");
  std::vector<std::uint8_t> side(n, 0);
  std::vector<std::uint8_t> best_side = side;
  std::uint64_t best = UINT64_MAX;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    for (std::uint32_t v = 1; v < n; ++v) side[v] = (mask >> (v - 1)) & 1;
    const auto c = mindisagree2_cost(h, side);
    if (c < best) {
      best = c;
      best_side = side;
    }
  }
  return {best, best_side};
}

LinEqInstance reduce_mindisagree2(const SignedGraph& h) {
  return LinEqInstance::from_function(
      h.n(), 2, [&](Vertex u, Vertex v) -> Label { return h.negative(u, v) ? 1 : 0; });
}

PaddedInstance pad_to_ug(const SignedGraph& h, Label q, std::uint32_t M,
                         std::span<const std::uint8_t> side) {
  if (q < 3) throw InvalidArgument("pad_to_ug needs q >= 3");
  if (M < 2 || M % 2 != 0) throw InvalidArgument("pad_to_ug needs a positive even M");
  if (side.size() != h.n()) throw InvalidArgument("clustering size mismatch");
  const std::uint32_t hn = h.n();
  const std::uint32_t n = hn + (q - 2) * M;

  // Group label of a vertex: 0 for the signed graph, i for group i.
  auto group = [&](Vertex v) -> Label { return v < hn ? 0 : 2 + (v - hn) / M; };
  auto position = [&](Vertex v) -> std::uint32_t { return (v - hn) % M; };

  std::vector<Label> perms;
  perms.reserve(num_pairs(n) * q);
  auto shift = [&](std::int64_t s) {
    const auto r = static_cast<Label>(((s % q) + q) % q);
    for (Label x = 0; x < q; ++x) perms.push_back((x + r) % q);
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Label gu = group(u);
      const Label gv = group(v);
      if (gu == 0 && gv == 0) {
        const bool swap = h.negative(u, v);
        for (Label x = 0; x < q; ++x) perms.push_back(swap && x < 2 ? 1 - x : x);
      } else if (gu == gv) {
        // Fix gu, rotate the remaining q - 1 labels one step (no fixed point).
        for (Label x = 0; x < q; ++x) {
          if (x == gu) {
            perms.push_back(x);
            continue;
          }
          Label next = (x + 1) % q;
          if (next == gu) next = (next + 1) % q;
          perms.push_back(next);
        }
      } else if (gu == 0) {
        shift(position(v) < M / 2 ? gv : std::int64_t{gv} - 1);
      } else {
        shift(std::int64_t{gv} - gu);
      }
    }
  }

  std::vector<Label> intended(n);
  for (Vertex v = 0; v < n; ++v) intended[v] = v < hn ? side[v] : group(v);
  return {UgInstance(n, q, std::move(perms)), Assignment(std::move(intended))};
}

}  // namespace ugsolve
