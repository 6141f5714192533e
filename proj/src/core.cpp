#include "ugsolve/core.hpp"

#include <string>

namespace ugsolve {

namespace {

template <class G>
std::uint64_t count_complete(const G& g, const Assignment& a) {
  a.check(g.n(), g.q());
  std::uint64_t bad = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!g.satisfied(u, v, a[u], a[v])) ++bad;
    }
  }
  return bad;
}

void check_triangle(std::uint32_t n, Vertex u, Vertex v, Vertex w) {
  if (u >= n || v >= n || w >= n) throw InvalidArgument("triangle vertex out of range");
  if (u == v || v == w || u == w) throw InvalidArgument("triangle vertices must be distinct");
}

}  // namespace

std::uint64_t violated_count(const LinEqInstance& g, const Assignment& a) {
  return count_complete(g, a);
}

std::uint64_t violated_count(const UgInstance& g, const Assignment& a) {
  return count_complete(g, a);
}

std::uint64_t violated_count(const DenseInstance& g, const Assignment& a) {
  a.check(g.n(), g.q());
  std::uint64_t bad = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v) && !g.satisfied(u, v, a[u], a[v])) ++bad;
    }
  }
  return bad;
}

std::uint64_t violated_count(const AnyInstance& g, const Assignment& a) {
  return std::visit([&](const auto& inst) { return violated_count(inst, a); }, g);
}

std::uint64_t satisfied_count(const AnyInstance& g, const Assignment& a) {
  return num_edges(g) - violated_count(g, a);
}

bool triangle_consistent(const LinEqInstance& g, Vertex u, Vertex v, Vertex w) {
  check_triangle(g.n(), u, v, w);
  const std::uint64_t sum = std::uint64_t{g.offset(u, v)} + g.offset(v, w) + g.offset(w, u);
  return sum % g.q() == 0;
}

bool triangle_consistent(const UgInstance& g, Vertex u, Vertex v, Vertex w) {
  check_triangle(g.n(), u, v, w);
  for (Label x = 0; x < g.q(); ++x) {
    if (g.apply(w, u, g.apply(v, w, g.apply(u, v, x))) == x) return true;
  }
  return false;
}

bool triangle_consistent(const DenseInstance& g, Vertex u, Vertex v, Vertex w) {
  check_triangle(g.n(), u, v, w);
  if (!g.has_edge(u, v) || !g.has_edge(v, w) || !g.has_edge(u, w)) {
    throw NotApplicable("triangle (" + std::to_string(u) + ", " + std::to_string(v) + ", " +
                        std::to_string(w) + ") has a missing edge");
  }
  return std::visit([&](const auto& base) { return triangle_consistent(base, u, v, w); },
                    g.base());
}

LinEqInstance to_square_instance(const LinEqInstance& g) {
  const std::uint32_t n = g.n();
  const Label q = g.q();
  if (n < 3) throw InvalidArgument("to_square_instance needs n >= 3");
  std::vector<std::uint32_t> tally(q, 0);
  std::vector<Label> touched;
  touched.reserve(n);
  std::vector<Label> offsets;
  offsets.reserve(g.num_edges());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (Vertex w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        Label c = g.offset(u, w) + g.offset(w, v);
        if (c >= q) c -= q;
        if (tally[c]++ == 0) touched.push_back(c);
      }
      Label best = 0;
      std::uint32_t best_count = 0;
      for (Label c : touched) {
        if (tally[c] > best_count || (tally[c] == best_count && c < best)) {
          best = c;
          best_count = tally[c];
        }
        tally[c] = 0;
      }
      touched.clear();
      offsets.push_back(best);
    }
  }
  return LinEqInstance(n, q, std::move(offsets));
}

std::uint64_t num_edges(const AnyInstance& g) {
  return std::visit([](const auto& inst) { return inst.num_edges(); }, g);
}

std::uint32_t num_vertices(const AnyInstance& g) {
  return std::visit([](const auto& inst) { return inst.n(); }, g);
}

Label alphabet_size(const AnyInstance& g) {
  return std::visit([](const auto& inst) { return inst.q(); }, g);
}

}  // namespace ugsolve
