#include "ugsolve/ptas.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "kernel.hpp"
#include "solver_util.hpp"
#include "ugsolve/error.hpp"

namespace ugsolve {

namespace {

template <class Table>
std::uint64_t greedy_pass(const Table& t, std::span<const Vertex> order, Label first_label,
                          std::span<Label> x, std::vector<std::uint32_t>& votes) {
  const Label q = t.q();
  x[order[0]] = first_label;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Vertex v = order[i];
    std::fill(votes.begin(), votes.end(), 0);
    for (std::size_t j = 0; j < i; ++j) {
      const Vertex u = order[j];
      ++votes[t.map(u, v, x[u])];
    }
    Label best = 0;
    for (Label a = 1; a < q; ++a) {
      if (votes[a] > votes[best]) best = a;
    }
    x[v] = best;
  }
  return detail::count_violated(t, std::span<const Label>(x));
}

template <class Table>
SolveReport greedy_impl(const Table& t, Rng& rng, unsigned restarts) {
  if (restarts == 0) throw InvalidArgument("greedy_max needs at least one restart");
  detail::Stopwatch clock;
  const std::uint32_t n = t.n();
  const Label start_labels = Table::kCyclic ? 1 : t.q();
  std::vector<Vertex> order(n);
  std::vector<Label> x(n);
  std::vector<std::uint32_t> votes(t.q());
  detail::Candidate best;
  for (unsigned r = 0; r < restarts; ++r) {
    std::iota(order.begin(), order.end(), Vertex{0});
    rng.shuffle(std::span<Vertex>(order));
    for (Label l = 0; l < start_labels; ++l) {
      const auto bad = greedy_pass(t, std::span<const Vertex>(order), l, std::span<Label>(x),
                                   votes);
      if (bad < best.violated) {
        best.violated = bad;
        best.index = r;
        best.labels = x;
      }
    }
  }
  SolveReport report;
  report.algorithm = "greedy-max";
  report.violated = best.violated;
  report.assignment = Assignment(std::move(best.labels));
  report.seed = rng.seed();
  report.extras["restarts"] = restarts;
  report.elapsed = clock.elapsed();
  return report;
}

template <class G>
SolveReport ptas_impl(const G& g, const PtasConfig& cfg) {
  cfg.validate();
  detail::Stopwatch clock;
  SolveReport voting = voting_solve(g, cfg.solver);
  Rng rng(cfg.seed);
  SolveReport greedy = greedy_max(g, rng, cfg.greedy_restarts);

  const double m = static_cast<double>(g.num_edges());
  const double eps_hat = static_cast<double>(voting.violated) / m;
  const double nu_hat = eps_hat < 0.5 ? 2.0 / (1.0 - 2.0 * eps_hat)
                                      : std::numeric_limits<double>::infinity();
  const bool voting_regime = 2.0 * nu_hat * (2.0 + nu_hat) * eps_hat < cfg.tau;

  const bool take_greedy = greedy.violated < voting.violated;
  SolveReport out = take_greedy ? std::move(greedy) : std::move(voting);
  out.extras["voting_val"] = static_cast<double>(take_greedy ? voting.violated : out.violated);
  out.extras["greedy_val"] = static_cast<double>(take_greedy ? out.violated : greedy.violated);
  out.extras["eps_hat"] = eps_hat;
  out.extras["nu_hat"] = nu_hat;
  out.extras["voting_regime"] = voting_regime ? 1.0 : 0.0;
  out.extras["tau"] = cfg.tau;
  out.extras["tau_prime"] = cfg.tau * cfg.tau / 32.0;
  out.extras["chose_greedy"] = take_greedy ? 1.0 : 0.0;
  out.algorithm = "ptas";
  out.seed = cfg.seed;
  out.elapsed = clock.elapsed();
  return out;
}

}  // namespace

void PtasConfig::validate() const {
  if (!(tau > 0.0)) throw InvalidArgument("tau must be positive");
  if (greedy_restarts < 1) throw InvalidArgument("greedy_restarts must be at least 1");
}

SolveReport greedy_max(const LinEqInstance& g, Rng& rng, unsigned restarts) {
  return greedy_impl(detail::CyclicTable(g), rng, restarts);
}

SolveReport greedy_max(const UgInstance& g, Rng& rng, unsigned restarts) {
  return greedy_impl(detail::PermTable(g), rng, restarts);
}

SolveReport ptas_solve(const LinEqInstance& g, const PtasConfig& cfg) {
  return ptas_impl(g, cfg);
}

SolveReport ptas_solve(const UgInstance& g, const PtasConfig& cfg) {
  return ptas_impl(g, cfg);
}

}  // namespace ugsolve
