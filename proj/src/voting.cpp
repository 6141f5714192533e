#include <cstdint>
#include <type_traits>
#include <variant>

#include "kernel.hpp"
#include "solver_util.hpp"
#include "ugsolve/core.hpp"
#include "ugsolve/solvers.hpp"

namespace ugsolve {

using detail::Candidate;
using detail::CyclicTable;
using detail::PermTable;
using detail::Tally;

namespace {

void check_voting_size(std::uint32_t n) {
  if (n < 3) throw InvalidArgument("voting needs at least 3 vertices");
}

template <class Table>
Assignment vote_once(const Table& t, Vertex pivot, Label pivot_label) {
  std::vector<Label> temp(t.n());
  std::vector<Label> out(t.n());
  Tally tally(t.q());
  detail::propagate(t, pivot, pivot_label, std::span<Label>(temp));
  detail::vote_round(t, pivot, pivot_label, std::span<const Label>(temp), std::span<Label>(out),
                     tally);
  return Assignment(std::move(out));
}

/// Voting candidates for the given pivots; candidate i is
/// (pivots[i / labels_per_pivot], i % labels_per_pivot).
template <class Table>
Candidate voting_candidates(const Table& t, std::span<const Vertex> pivots,
                            std::size_t labels_per_pivot, unsigned threads) {
  return detail::best_candidate(pivots.size() * labels_per_pivot, t.n(), threads, [&] {
    return [&t, pivots, labels_per_pivot, temp = std::vector<Label>(t.n()),
            tally = Tally(t.q())](std::size_t i, std::span<Label> x) mutable {
      const Vertex p = pivots[i / labels_per_pivot];
      const auto l = static_cast<Label>(i % labels_per_pivot);
      detail::propagate(t, p, l, std::span<Label>(temp));
      detail::vote_round(t, p, l, std::span<const Label>(temp), x, tally);
      return detail::count_violated(t, std::span<const Label>(x));
    };
  });
}

std::vector<Vertex> all_vertices(std::uint32_t n) {
  std::vector<Vertex> v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = i;
  return v;
}

template <class G, class Table>
SolveReport voting_solve_impl(const G& g, std::size_t labels_per_pivot,
                              const SolverOptions& opts) {
  detail::Stopwatch clock;
  if (g.n() < 3) {
    auto r = pivot_best(g, opts);
    r.algorithm = "voting";
    r.elapsed = clock.elapsed();
    return r;
  }
  const Table t(g);
  const auto pivots = all_vertices(g.n());
  auto r = detail::candidate_report(
      "voting", voting_candidates(t, std::span<const Vertex>(pivots), labels_per_pivot,
                                  opts.threads),
      labels_per_pivot);
  r.elapsed = clock.elapsed();
  return r;
}

/// One cyclic voting round (pivot label 0) in a single pass over the stored
/// offsets, with an n x q vote table instead of the n x n shift table.
Candidate stream_vote(const LinEqInstance& g, Vertex p) {
  const std::uint32_t n = g.n();
  const Label q = g.q();
  const auto c = g.offsets();
  std::vector<Label> temp(n);
  for (Vertex u = 0; u < n; ++u) temp[u] = u == p ? 0 : g.apply(p, u, 0);
  std::vector<std::uint32_t> votes(std::size_t{n} * q, 0);
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++k) {
      if (u == p || v == p) continue;
      const Label raw = c[k];
      Label to_v = temp[u] + q - raw;
      if (to_v >= q) to_v -= q;
      Label to_u = temp[v] + raw;
      if (to_u >= q) to_u -= q;
      ++votes[std::size_t{v} * q + to_v];
      ++votes[std::size_t{u} * q + to_u];
    }
  }
  Candidate out;
  out.index = p;
  out.labels.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (v == p) continue;
    const std::uint32_t* row = &votes[std::size_t{v} * q];
    Label best = 0, best_key = q;
    std::uint32_t best_count = 0;
    for (Label x = 0; x < q; ++x) {
      if (row[x] == 0 || row[x] < best_count) continue;
      const Label key = v < p ? x : (q - x) % q;
      if (row[x] > best_count || key < best_key) {
        best = x;
        best_count = row[x];
        best_key = key;
      }
    }
    out.labels[v] = best;
  }
  out.violated = violated_count(g, Assignment(out.labels));
  return out;
}

template <class G, class Table>
SolveReport randomized_voting_impl(const G& g, std::size_t labels_per_pivot, Rng& rng) {
  detail::Stopwatch clock;
  const auto p = static_cast<Vertex>(rng.below(g.n()));
  SolveReport r;
  if (g.n() < 3) {
    Candidate best;
    for (Label l = 0; l < labels_per_pivot; ++l) {
      auto a = pivot_assign(g, p, l);
      const auto bad = violated_count(g, a);
      if (bad < best.violated) {
        best.violated = bad;
        best.index = l;
        best.labels = std::vector<Label>(a.labels().begin(), a.labels().end());
      }
    }
    r = detail::candidate_report("rvoting", std::move(best), labels_per_pivot);
    r.pivot = p;
  } else if constexpr (std::is_same_v<G, LinEqInstance>) {
    if (g.q() <= g.n()) {
      r = detail::candidate_report("rvoting", stream_vote(g, p), 1);
    } else {
      const Table t(g);
      const std::vector<Vertex> pivots{p};
      r = detail::candidate_report(
          "rvoting", voting_candidates(t, std::span<const Vertex>(pivots), 1, 1), 1);
    }
    r.pivot = p;
  } else {
    const Table t(g);
    const std::vector<Vertex> pivots{p};
    r = detail::candidate_report(
        "rvoting", voting_candidates(t, std::span<const Vertex>(pivots), labels_per_pivot, 1),
        labels_per_pivot);
    r.pivot = p;
  }
  r.seed = rng.seed();
  r.elapsed = clock.elapsed();
  return r;
}

}  // namespace

Assignment voting_single(const LinEqInstance& g, Vertex pivot, Label pivot_label) {
  detail::check_pivot(g.n(), g.q(), pivot, pivot_label);
  detail::check_cyclic_label(pivot_label);
  check_voting_size(g.n());
  return vote_once(CyclicTable(g), pivot, pivot_label);
}

Assignment voting_single(const UgInstance& g, Vertex pivot, Label pivot_label) {
  detail::check_pivot(g.n(), g.q(), pivot, pivot_label);
  check_voting_size(g.n());
  return vote_once(PermTable(g), pivot, pivot_label);
}

SolveReport voting_solve(const LinEqInstance& g, const SolverOptions& opts) {
  return voting_solve_impl<LinEqInstance, CyclicTable>(g, 1, opts);
}

SolveReport voting_solve(const UgInstance& g, const SolverOptions& opts) {
  return voting_solve_impl<UgInstance, PermTable>(g, g.q(), opts);
}

SolveReport randomized_voting(const LinEqInstance& g, Rng& rng) {
  return randomized_voting_impl<LinEqInstance, CyclicTable>(g, 1, rng);
}

SolveReport randomized_voting(const UgInstance& g, Rng& rng) {
  return randomized_voting_impl<UgInstance, PermTable>(g, g.q(), rng);
}

namespace {

template <class Table>
SolveReport dense_voting_impl(const Table& t, const DenseInstance& g,
                              std::size_t labels_per_pivot, const SolverOptions& opts) {
  const detail::Adjacency adj(g);
  Candidate best = detail::best_candidate(g.n() * labels_per_pivot, g.n(), opts.threads, [&] {
    return [&, temp = std::vector<Label>(g.n()), tally = Tally(g.q())](
               std::size_t i, std::span<Label> x) mutable {
      const auto p = static_cast<Vertex>(i / labels_per_pivot);
      const auto l = static_cast<Label>(i % labels_per_pivot);
      detail::propagate_dense(t, adj, p, l, std::span<Label>(temp));
      detail::vote_round_dense(t, adj, p, l, std::span<const Label>(temp), x, tally);
      return detail::count_violated_dense(t, adj, std::span<const Label>(x));
    };
  });
  return detail::candidate_report("dense-voting", std::move(best), labels_per_pivot);
}

template <class Table>
Assignment dense_vote_once(const Table& t, const DenseInstance& g, Vertex pivot,
                           Label pivot_label) {
  const detail::Adjacency adj(g);
  std::vector<Label> temp(g.n());
  std::vector<Label> out(g.n());
  Tally tally(g.q());
  detail::propagate_dense(t, adj, pivot, pivot_label, std::span<Label>(temp));
  detail::vote_round_dense(t, adj, pivot, pivot_label, std::span<const Label>(temp),
                           std::span<Label>(out), tally);
  return Assignment(std::move(out));
}

}  // namespace

SolveReport dense_voting(const DenseInstance& g, const SolverOptions& opts) {
  check_voting_size(g.n());
  detail::Stopwatch clock;
  SolveReport r;
  if (const auto* lin = std::get_if<LinEqInstance>(&g.base())) {
    r = dense_voting_impl(CyclicTable(*lin), g, 1, opts);
  } else {
    const auto& ug = std::get<UgInstance>(g.base());
    r = dense_voting_impl(PermTable(ug), g, g.q(), opts);
  }
  r.elapsed = clock.elapsed();
  return r;
}

Assignment dense_voting_single(const DenseInstance& g, Vertex pivot, Label pivot_label) {
  detail::check_pivot(g.n(), g.q(), pivot, pivot_label);
  check_voting_size(g.n());
  if (const auto* lin = std::get_if<LinEqInstance>(&g.base())) {
    detail::check_cyclic_label(pivot_label);
    return dense_vote_once(CyclicTable(*lin), g, pivot, pivot_label);
  }
  return dense_vote_once(PermTable(std::get<UgInstance>(g.base())), g, pivot, pivot_label);
}

namespace {

template <class G>
VotingDiagnostics diagnose(const G& g, const Assignment& optimum) {
  optimum.check(g.n(), g.q());
  check_voting_size(g.n());
  const std::uint32_t n = g.n();
  const Label q = g.q();
  std::vector<std::uint32_t> red(n, 0);
  std::uint64_t opt_val = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.satisfied(u, v, optimum[u], optimum[v])) {
        ++red[u];
        ++red[v];
        ++opt_val;
      }
    }
  }
  VotingDiagnostics d;
  d.eps = static_cast<double>(opt_val) / static_cast<double>(g.num_edges());
  if (d.eps >= 0.5) throw OutOfRegime("voting diagnostics need eps < 1/2");
  for (Vertex v = 1; v < n; ++v) {
    if (red[v] < red[d.pivot]) d.pivot = v;
  }

  // Reference labeling with the pivot's label fixed as the algorithm sees it.
  std::vector<Label> ref(optimum.labels().begin(), optimum.labels().end());
  Label pivot_label = optimum[d.pivot];
  if constexpr (std::is_same_v<G, LinEqInstance>) {
    const Label s = optimum[d.pivot];
    for (auto& x : ref) x = (x + q - s) % q;
    pivot_label = 0;
  }
  const Assignment temp = pivot_assign(g, d.pivot, pivot_label);
  const Assignment final_labels = voting_single(g, d.pivot, pivot_label);

  const double nm1 = static_cast<double>(n - 1);
  d.flippable_threshold = nm1 / 2.0 - d.eps * nm1;
  d.flippable_bound = d.eps * (2.0 / (1.0 - 2.0 * d.eps)) * static_cast<double>(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v != d.pivot && temp[v] != ref[v]) ++d.rogue;
    const bool flippable = static_cast<double>(red[v]) >= d.flippable_threshold;
    if (flippable) {
      ++d.flippable;
    } else if (final_labels[v] != ref[v]) {
      d.unflippable_flipped.push_back(v);
    }
  }
  return d;
}

}  // namespace

VotingDiagnostics voting_diagnostics(const LinEqInstance& g, const Assignment& optimum) {
  return diagnose(g, optimum);
}

VotingDiagnostics voting_diagnostics(const UgInstance& g, const Assignment& optimum) {
  return diagnose(g, optimum);
}

}  // namespace ugsolve
