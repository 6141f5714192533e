#include <cstdint>

#include "kernel.hpp"
#include "solver_util.hpp"
#include "ugsolve/core.hpp"
#include "ugsolve/solvers.hpp"

namespace ugsolve {

using detail::Candidate;
using detail::CyclicTable;
using detail::PermTable;

Assignment pivot_assign(const LinEqInstance& g, Vertex pivot, Label pivot_label) {
  detail::check_pivot(g.n(), g.q(), pivot, pivot_label);
  detail::check_cyclic_label(pivot_label);
  std::vector<Label> x(g.n());
  for (Vertex v = 0; v < g.n(); ++v) x[v] = v == pivot ? 0 : g.offset(v, pivot);
  return Assignment(std::move(x));
}

Assignment pivot_assign(const UgInstance& g, Vertex pivot, Label pivot_label) {
  detail::check_pivot(g.n(), g.q(), pivot, pivot_label);
  std::vector<Label> x(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    x[v] = v == pivot ? pivot_label : g.apply(pivot, v, pivot_label);
  }
  return Assignment(std::move(x));
}

std::vector<Label> pivot_assign(const DenseInstance& g, Vertex pivot, Label pivot_label) {
  detail::check_pivot(g.n(), g.q(), pivot, pivot_label);
  if (g.is_cyclic()) detail::check_cyclic_label(pivot_label);
  std::vector<Label> x(g.n(), kUnlabeled);
  x[pivot] = pivot_label;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.has_edge(pivot, v)) x[v] = g.apply(pivot, v, pivot_label);
  }
  return x;
}

namespace {

template <class Table>
Candidate pivot_candidates(const Table& cand, const Table& obj, std::size_t labels_per_pivot,
                           unsigned threads) {
  return detail::best_candidate(cand.n() * labels_per_pivot, cand.n(), threads, [&] {
    return [&](std::size_t i, std::span<Label> x) {
      detail::propagate(cand, static_cast<Vertex>(i / labels_per_pivot),
                        static_cast<Label>(i % labels_per_pivot), x);
      return detail::count_violated(obj, std::span<const Label>(x));
    };
  });
}

}  // namespace

SolveReport pivot_best(const LinEqInstance& g, const SolverOptions& opts) {
  detail::Stopwatch clock;
  const CyclicTable t(g);
  auto r = detail::candidate_report("pivot", pivot_candidates(t, t, 1, opts.threads), 1);
  r.elapsed = clock.elapsed();
  return r;
}

SolveReport pivot_best(const UgInstance& g, const SolverOptions& opts) {
  detail::Stopwatch clock;
  const PermTable t(g);
  auto r = detail::candidate_report("pivot", pivot_candidates(t, t, g.q(), opts.threads), g.q());
  r.elapsed = clock.elapsed();
  return r;
}

SolveReport pivot_best(const LinEqInstance& candidates, const LinEqInstance& objective,
                       const SolverOptions& opts) {
  if (candidates.n() != objective.n() || candidates.q() != objective.q()) {
    throw InvalidArgument("candidate and objective instances differ in shape");
  }
  detail::Stopwatch clock;
  const CyclicTable cand(candidates);
  const CyclicTable obj(objective);
  auto r = detail::candidate_report("pivot", pivot_candidates(cand, obj, 1, opts.threads), 1);
  r.elapsed = clock.elapsed();
  return r;
}

SolveReport pivot_random(const LinEqInstance& g, Rng& rng) {
  detail::Stopwatch clock;
  const auto p = static_cast<Vertex>(rng.below(g.n()));
  SolveReport r;
  r.algorithm = "pivot-random";
  r.assignment = pivot_assign(g, p, 0);
  r.violated = violated_count(g, r.assignment);
  r.pivot = p;
  r.pivot_label = 0;
  r.seed = rng.seed();
  r.elapsed = clock.elapsed();
  return r;
}

SolveReport pivot_random(const UgInstance& g, Rng& rng) {
  detail::Stopwatch clock;
  const auto p = static_cast<Vertex>(rng.below(g.n()));
  const PermTable t(g);
  Candidate best;
  std::vector<Label> x(g.n());
  for (Label l = 0; l < g.q(); ++l) {
    detail::propagate(t, p, l, std::span<Label>(x));
    const auto bad = detail::count_violated(t, std::span<const Label>(x));
    if (bad < best.violated) {
      best.violated = bad;
      best.index = std::size_t{p} * g.q() + l;
      best.labels = x;
    }
  }
  auto r = detail::candidate_report("pivot-random", std::move(best), g.q());
  r.seed = rng.seed();
  r.elapsed = clock.elapsed();
  return r;
}

}  // namespace ugsolve
