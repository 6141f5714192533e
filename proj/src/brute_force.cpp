#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "kernel.hpp"
#include "solver_util.hpp"
#include "ugsolve/core.hpp"
#include "ugsolve/solvers.hpp"

namespace ugsolve {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

/// Depth-first search over labelings in lexicographic order, pruning any
/// prefix whose violation count already reaches the best complete value.
template <class Table>
class BranchAndBound {
 public:
  BranchAndBound(const Table& t, const std::vector<std::uint8_t>* mask, bool fix_first,
                 std::uint64_t upper_bound)
      : t_(t),
        mask_(mask),
        fix_first_(fix_first),
        n_(t.n()),
        x_(t.n(), 0),
        votes_(t.n() * std::size_t{t.q()}, 0),
        best_(upper_bound + 1) {}

  void run() { descend(0, 0); }

  std::uint64_t best() const { return best_; }
  std::vector<Label>& best_labels() { return best_x_; }

 private:
  bool present(Vertex u, Vertex v) const {
    return mask_ == nullptr || (*mask_)[std::size_t{u} * n_ + v] != 0;
  }

  void descend(Vertex k, std::uint64_t cost) {
    if (k == n_) {
      if (cost < best_) {
        best_ = cost;
        best_x_ = x_;
      }
      return;
    }
    const Label q = t_.q();
    std::uint32_t* votes = &votes_[std::size_t{k} * q];
    std::uint32_t placed = 0;
    for (Vertex j = 0; j < k; ++j) {
      if (!present(j, k)) continue;
      ++votes[t_.map(j, k, x_[j])];
      ++placed;
    }
    const Label labels = (k == 0 && fix_first_) ? 1 : q;
    for (Label a = 0; a < labels; ++a) {
      const std::uint64_t c = cost + (placed - votes[a]);
      if (c >= best_) continue;
      x_[k] = a;
      descend(k + 1, c);
    }
    std::fill(votes, votes + q, 0);
  }

  const Table& t_;
  const std::vector<std::uint8_t>* mask_;
  bool fix_first_;
  std::uint32_t n_;
  std::vector<Label> x_;
  std::vector<Label> best_x_;
  std::vector<std::uint32_t> votes_;
  std::uint64_t best_;
};

void check_space(std::uint64_t space, std::uint64_t limit) {
  if (space > limit) {
    throw ResourceLimit("brute force search space " + std::to_string(space) +
                        " exceeds the limit " + std::to_string(limit));
  }
}

template <class Table>
SolveReport search(const Table& t, const std::vector<std::uint8_t>* mask, bool fix_first,
                   std::uint64_t upper_bound) {
  BranchAndBound<Table> bb(t, mask, fix_first, upper_bound);
  bb.run();
  SolveReport r;
  r.algorithm = "brute";
  r.violated = bb.best();
  r.assignment = Assignment(std::move(bb.best_labels()));
  return r;
}

}  // namespace

std::uint64_t brute_force_space(const AnyInstance& g) {
  const std::uint32_t n = num_vertices(g);
  const Label q = alphabet_size(g);
  bool cyclic = std::holds_alternative<LinEqInstance>(g);
  if (const auto* d = std::get_if<DenseInstance>(&g)) cyclic = d->is_cyclic();
  return saturating_pow(q, cyclic ? n - 1 : n);
}

SolveReport brute_force(const LinEqInstance& g, std::uint64_t limit) {
  check_space(brute_force_space(g), limit);
  detail::Stopwatch clock;
  const std::uint64_t ub = pivot_best(g).violated;
  auto r = search(detail::CyclicTable(g), nullptr, true, ub);
  r.elapsed = clock.elapsed();
  return r;
}

SolveReport brute_force(const UgInstance& g, std::uint64_t limit) {
  check_space(brute_force_space(g), limit);
  detail::Stopwatch clock;
  const std::uint64_t ub = pivot_best(g).violated;
  auto r = search(detail::PermTable(g), nullptr, false, ub);
  r.elapsed = clock.elapsed();
  return r;
}

SolveReport brute_force(const DenseInstance& g, std::uint64_t limit) {
  check_space(brute_force_space(g), limit);
  detail::Stopwatch clock;
  const std::uint32_t n = g.n();
  std::vector<std::uint8_t> mask(std::size_t{n} * n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) mask[std::size_t{u} * n + v] = g.has_edge(u, v) ? 1 : 0;
  }
  // All-zero labeling is always feasible, so its cost is a valid start bound.
  std::uint64_t ub = violated_count(g, Assignment(n, 0));
  if (n >= 3) ub = std::min(ub, dense_voting(g).violated);
  SolveReport r;
  if (const auto* lin = std::get_if<LinEqInstance>(&g.base())) {
    r = search(detail::CyclicTable(*lin), &mask, true, ub);
  } else {
    r = search(detail::PermTable(std::get<UgInstance>(g.base())), &mask, false, ub);
  }
  r.elapsed = clock.elapsed();
  return r;
}

}  // namespace ugsolve
