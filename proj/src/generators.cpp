#include <algorithm>
#include <numeric>
#include <string>

#include "ugsolve/error.hpp"
#include "ugsolve/genlab.hpp"

namespace ugsolve {

namespace {

Assignment random_assignment(std::uint32_t n, Label q, Rng& rng) {
  std::vector<Label> x(n);
  for (auto& l : x) l = static_cast<Label>(rng.below(q));
  return Assignment(std::move(x));
}

/// Uniform permutation of [out.size()] with p(from) = to, written to out.
void random_perm_through(Label from, Label to, Rng& rng, std::span<Label> out) {
  std::iota(out.begin(), out.end(), Label{0});
  rng.shuffle(out);
  const auto at = static_cast<std::size_t>(std::find(out.begin(), out.end(), to) - out.begin());
  std::swap(out[at], out[from]);
}

/// A uniform label of [q] other than `avoid`. Requires q >= 2.
Label other_label(Label q, Label avoid, Rng& rng) {
  const auto r = static_cast<Label>(rng.below(q - 1));
  return r >= avoid ? r + 1 : r;
}

}  // namespace

PlantedInstance planted(std::uint32_t n, Label q, std::uint64_t num_corrupt,
                        ConstraintKind kind, Rng& rng) {
  if (n < 2) throw InvalidArgument("planted instance needs n >= 2");
  if (q < 1) throw InvalidArgument("alphabet size must be positive");
  const std::uint64_t m = num_pairs(n);
  if (num_corrupt > m) {
    throw InvalidArgument("cannot corrupt " + std::to_string(num_corrupt) + " of " +
                          std::to_string(m) + " edges");
  }
  if (q == 1 && num_corrupt > 0) throw InvalidArgument("q = 1 admits no violated edge");

  Assignment x = random_assignment(n, q, rng);

  std::vector<std::uint64_t> pairs(m);
  std::iota(pairs.begin(), pairs.end(), std::uint64_t{0});
  std::vector<std::uint8_t> bad(m, 0);
  if (num_corrupt > 0) {
    // Partial Fisher-Yates: the first num_corrupt slots are a uniform subset.
    for (std::uint64_t i = 0; i < num_corrupt; ++i) {
      const std::uint64_t j = i + rng.below(m - i);
      std::swap(pairs[i], pairs[j]);
      bad[pairs[i]] = 1;
    }
  }

  PlantedInstance out{LinEqInstance::zeros(2, 1), x, {}};
  if (kind == ConstraintKind::kCyclic) {
    std::vector<Label> offsets(m);
    std::size_t e = 0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v, ++e) {
        const Label good = (x[u] + q - x[v]) % q;
        if (bad[e] != 0) {
          offsets[e] = other_label(q, good, rng);
          out.corrupted.push_back({u, v});
        } else {
          offsets[e] = good;
        }
      }
    }
    out.instance = LinEqInstance(n, q, std::move(offsets));
  } else {
    std::vector<Label> perms(m * q);
    std::size_t e = 0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v, ++e) {
        Label target = x[v];
        if (bad[e] != 0) {
          target = other_label(q, x[v], rng);
          out.corrupted.push_back({u, v});
        }
        random_perm_through(x[u], target, rng, std::span<Label>(perms.data() + e * q, q));
      }
    }
    out.instance = UgInstance(n, q, std::move(perms));
  }
  return out;
}

PlantedInstance noise_model(std::uint32_t n, Label q, double p_noise, Rng& rng) {
  if (n < 2) throw InvalidArgument("noise model needs n >= 2");
  if (q < 1) throw InvalidArgument("alphabet size must be positive");
  if (!(p_noise >= 0.0 && p_noise <= 1.0)) throw InvalidArgument("p_noise must lie in [0, 1]");
  Assignment x = random_assignment(n, q, rng);
  PlantedInstance out{LinEqInstance::zeros(2, 1), x, {}};
  std::vector<Label> offsets;
  offsets.reserve(num_pairs(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      Label c = (x[u] + q - x[v]) % q;
      if (q > 1 && rng.bernoulli(p_noise)) {
        c = (c + 1 + static_cast<Label>(rng.below(q - 1))) % q;
        out.corrupted.push_back({u, v});
      }
      offsets.push_back(c);
    }
  }
  out.instance = LinEqInstance(n, q, std::move(offsets));
  return out;
}

LinEqInstance tight_pivot_example(std::uint32_t n, Label q) {
  if (n < 5) throw InvalidArgument("tight example needs n >= 5");
  if (q < 2) throw InvalidArgument("tight example needs q >= 2");
  return LinEqInstance::from_function(n, q, [&](Vertex u, Vertex v) -> Label {
    if (v == u + 1) return 1;
    if (u == 0 && v == n - 1) return q - 1;  // x_{n-1} - x_0 = 1
    return 0;
  });
}

DenseInstance sparsify_everywhere_dense(const DenseInstance::Base& base, double delta,
                                        Rng& rng) {
  if (!(delta >= 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in [0, 1)");
  const std::uint32_t n = std::visit([](const auto& g) { return g.n(); }, base);
  const std::uint32_t floor_degree = required_degree(n, delta);
  const std::uint64_t m = num_pairs(n);
  std::vector<std::uint8_t> present(m, 1);
  std::vector<std::uint32_t> degree(n, n - 1);
  std::vector<Edge> order;
  order.reserve(m);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) order.push_back({u, v});
  }
  rng.shuffle(std::span<Edge>(order));
  for (const auto& [u, v] : order) {
    if (degree[u] > floor_degree && degree[v] > floor_degree) {
      present[pair_index(n, u, v)] = 0;
      --degree[u];
      --degree[v];
    }
  }
  return DenseInstance(base, std::move(present), delta);
}

}  // namespace ugsolve
