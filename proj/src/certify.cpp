#include "ugsolve/certify.hpp"

#include <numeric>
#include <string>

#include "kernel.hpp"
#include "ugsolve/core.hpp"
#include "ugsolve/error.hpp"

namespace ugsolve {

namespace {

template <class Table>
bool consistent(const Table& t, Vertex u, Vertex v, Vertex w) {
  const Label tries = Table::kCyclic ? 1 : t.q();
  for (Label x = 0; x < tries; ++x) {
    if (t.map(w, u, t.map(v, w, t.map(u, v, x))) == x) return true;
  }
  return false;
}

/// Calls f(table, has_edge) with a kernel table for the instance.
template <class F>
void with_table(const AnyInstance& g, F&& f) {
  auto complete = [](Vertex, Vertex) { return true; };
  if (const auto* lin = std::get_if<LinEqInstance>(&g)) {
    f(detail::CyclicTable(*lin), complete);
  } else if (const auto* ug = std::get_if<UgInstance>(&g)) {
    f(detail::PermTable(*ug), complete);
  } else {
    const auto& d = std::get<DenseInstance>(g);
    auto has = [&d](Vertex u, Vertex v) { return d.has_edge(u, v); };
    if (const auto* base = std::get_if<LinEqInstance>(&d.base())) {
      f(detail::CyclicTable(*base), has);
    } else {
      f(detail::PermTable(std::get<UgInstance>(d.base())), has);
    }
  }
}

}  // namespace

void for_each_inconsistent_triangle(const AnyInstance& g,
                                    const std::function<void(Vertex, Vertex, Vertex)>& f) {
  with_table(g, [&](const auto& t, auto has) {
    const std::uint32_t n = t.n();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!has(u, v)) continue;
        for (Vertex w = v + 1; w < n; ++w) {
          if (has(u, w) && has(v, w) && !consistent(t, u, v, w)) f(u, v, w);
        }
      }
    }
  });
}

std::uint64_t inconsistent_triangles(const AnyInstance& g) {
  std::uint64_t count = 0;
  for_each_inconsistent_triangle(g, [&](Vertex, Vertex, Vertex) { ++count; });
  return count;
}

PackingCertificate triangle_packing_lb(const AnyInstance& g, Rng& rng) {
  PackingCertificate cert;
  cert.seed = rng.seed();
  with_table(g, [&](const auto& t, auto has) {
    const std::uint32_t n = t.n();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    rng.shuffle(std::span<Vertex>(order));
    std::vector<std::uint8_t> used(std::size_t{n} * n, 0);
    auto free_edge = [&](Vertex a, Vertex b) {
      return has(a, b) && used[std::size_t{a} * n + b] == 0;
    };
    auto take = [&](Vertex a, Vertex b) {
      used[std::size_t{a} * n + b] = 1;
      used[std::size_t{b} * n + a] = 1;
    };
    for (std::uint32_t i = 0; i < n; ++i) {
      const Vertex a = order[i];
      for (std::uint32_t j = i + 1; j < n; ++j) {
        const Vertex b = order[j];
        if (!free_edge(a, b)) continue;
        for (std::uint32_t k = j + 1; k < n; ++k) {
          const Vertex c = order[k];
          if (!free_edge(a, c) || !free_edge(b, c) || consistent(t, a, b, c)) continue;
          take(a, b);
          take(a, c);
          take(b, c);
          cert.triangles.push_back({a, b, c});
          break;  // (a, b) is used now
        }
      }
    }
  });
  return cert;
}

bool verify_certificate(const AnyInstance& g, const PackingCertificate& cert) {
  const std::uint32_t n = num_vertices(g);
  std::vector<std::uint8_t> used(num_pairs(n), 0);
  auto claim = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    auto& slot = used[pair_index(n, a, b)];
    if (slot != 0) return false;
    slot = 1;
    return true;
  };
  for (const auto& [a, b, c] : cert.triangles) {
    if (a >= n || b >= n || c >= n || a == b || b == c || a == c) return false;
    try {
      const bool ok = std::visit(
          [&](const auto& inst) { return triangle_consistent(inst, a, b, c); }, g);
      if (ok) return false;
    } catch (const NotApplicable&) {
      return false;
    }
    if (!claim(a, b) || !claim(a, c) || !claim(b, c)) return false;
  }
  return true;
}

GuaranteeBound GuaranteeBound::complete(std::uint64_t opt_val, std::uint64_t n,
                                        std::uint64_t m) {
  if (m == 0 || n < 2) throw InvalidArgument("bound needs at least one edge");
  GuaranteeBound b;
  b.n = n;
  b.m = m;
  b.eps = static_cast<double>(opt_val) / static_cast<double>(m);
  if (!(b.eps < 0.5)) {
    throw OutOfRegime("eps = " + std::to_string(b.eps) + " is not below 1/2");
  }
  b.nu = 2.0 / (1.0 - 2.0 * b.eps);
  return b;
}

GuaranteeBound GuaranteeBound::dense(std::uint64_t opt_val, std::uint64_t n, std::uint64_t m,
                                     double delta) {
  if (m == 0 || n < 2) throw InvalidArgument("bound needs at least one edge");
  GuaranteeBound b;
  b.n = n;
  b.m = m;
  b.delta = delta;
  b.eps = static_cast<double>(opt_val) / static_cast<double>(m);
  const double slack = 1.0 - 2.0 * b.eps - 2.0 * delta;
  if (!(slack > 0.0)) throw OutOfRegime("1 - 2 eps - 2 delta is not positive");
  b.nu = 2.0 / slack;
  return b;
}

double voting_bound(std::uint64_t opt_val, std::uint64_t n, std::uint64_t m) {
  const auto b = GuaranteeBound::complete(opt_val, n, m);
  return static_cast<double>(opt_val) * 2.0 * b.eps * b.nu * (2.0 + b.nu) *
         (1.0 + 1.0 / static_cast<double>(n - 1));
}

double dense_voting_bound(std::uint64_t opt_val, std::uint64_t n, std::uint64_t m,
                          double delta) {
  const auto b = GuaranteeBound::dense(opt_val, n, m, delta);
  return static_cast<double>(opt_val) * 2.0 * b.eps * b.nu * (2.0 + b.nu) / (1.0 - delta) +
         b.eps * b.eps * b.nu * b.nu * static_cast<double>(n);
}

double randomized_voting_bound(std::uint64_t opt_val, std::uint64_t n, std::uint64_t m) {
  const auto b = GuaranteeBound::complete(opt_val, n, m);
  const double eps2 = 2.0 * b.eps;
  if (!(eps2 < 0.5)) throw OutOfRegime("doubled eps is not below 1/2");
  const double nu2 = 2.0 / (1.0 - 2.0 * eps2);
  return static_cast<double>(opt_val) * 2.0 * eps2 * nu2 * (2.0 + nu2) *
         (1.0 + 1.0 / static_cast<double>(n - 1));
}

}  // namespace ugsolve
