#include "ugsolve/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "ugsolve/certify.hpp"
#include "ugsolve/core.hpp"
#include "ugsolve/error.hpp"
#include "ugsolve/ptas.hpp"

namespace ugsolve {

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"pivot",       "pivot-random", "voting",
                                              "rvoting",     "dense-voting", "brute",
                                              "greedy-max",  "ptas"};
  return names;
}

namespace {

template <class F>
SolveReport on_complete(const AnyInstance& g, std::string_view alg, F&& f) {
  if (const auto* lin = std::get_if<LinEqInstance>(&g)) return f(*lin);
  if (const auto* ug = std::get_if<UgInstance>(&g)) return f(*ug);
  throw NotApplicable(std::string(alg) +
                      " needs a complete instance; use dense-voting or brute");
}

}  // namespace

SolveReport run_algorithm(std::string_view alg, const AnyInstance& g, const RunOptions& opts) {
  const SolverOptions solver{opts.threads};
  if (alg == "pivot") {
    return on_complete(g, alg, [&](const auto& h) { return pivot_best(h, solver); });
  }
  if (alg == "pivot-random") {
    Rng rng(opts.seed);
    return on_complete(g, alg, [&](const auto& h) { return pivot_random(h, rng); });
  }
  if (alg == "voting") {
    return on_complete(g, alg, [&](const auto& h) { return voting_solve(h, solver); });
  }
  if (alg == "rvoting") {
    Rng rng(opts.seed);
    return on_complete(g, alg, [&](const auto& h) { return randomized_voting(h, rng); });
  }
  if (alg == "greedy-max") {
    Rng rng(opts.seed);
    return on_complete(g, alg, [&](const auto& h) { return greedy_max(h, rng); });
  }
  if (alg == "ptas") {
    PtasConfig cfg;
    cfg.tau = opts.tau;
    cfg.seed = opts.seed;
    cfg.solver = solver;
    cfg.validate();
    return on_complete(g, alg, [&](const auto& h) { return ptas_solve(h, cfg); });
  }
  if (alg == "dense-voting") {
    return std::visit(
        [&](const auto& h) -> SolveReport {
          using T = std::decay_t<decltype(h)>;
          if constexpr (std::is_same_v<T, DenseInstance>) {
            return dense_voting(h, solver);
          } else {
            return dense_voting(DenseInstance::complete(h), solver);
          }
        },
        g);
  }
  if (alg == "brute") {
    return std::visit([&](const auto& h) { return brute_force(h, opts.brute_limit); }, g);
  }
  throw InvalidArgument("unknown algorithm '" + std::string(alg) + "'");
}

void BenchConfig::validate() const {
  if (ns.empty() || qs.empty() || deltas.empty() || corruptions.empty() || algorithms.empty()) {
    throw InvalidArgument("bench sweep needs at least one n, q, delta, corruption and algorithm");
  }
  if (seeds == 0) throw InvalidArgument("bench sweep needs at least one seed");
  for (auto n : ns) {
    if (n < 2) throw InvalidArgument("bench n must be at least 2");
  }
  for (auto q : qs) {
    if (q < 1) throw InvalidArgument("bench q must be positive");
  }
  for (double d : deltas) {
    if (!(d >= 0.0 && d < 1.0)) throw InvalidArgument("bench delta must lie in [0, 1)");
  }
  for (double c : corruptions) {
    if (!(c >= 0.0 && c <= 1.0)) throw InvalidArgument("bench corruption must lie in [0, 1]");
  }
  const auto& known = algorithm_names();
  for (const auto& a : algorithms) {
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw InvalidArgument("unknown algorithm '" + a + "'");
    }
  }
  if (family == BenchFamily::kTight && kind != ConstraintKind::kCyclic) {
    throw InvalidArgument("the tight family is cyclic only");
  }
}

std::optional<double> BenchRow::ratio() const {
  if (!val) return std::nullopt;
  if (opt_or_lb == 0) {
    return *val == 0 ? std::optional<double>(1.0)
                     : std::optional<double>(std::numeric_limits<double>::infinity());
  }
  return static_cast<double>(*val) / static_cast<double>(opt_or_lb);
}

namespace {

struct Cell {
  std::uint32_t n;
  Label q;
  double delta;
  double corruption;
  std::uint64_t seed;
};

std::vector<BenchRow> run_cell(const BenchConfig& cfg, const Cell& cell) {
  BenchRow proto;
  proto.n = cell.n;
  proto.q = cell.q;
  proto.delta = cell.delta;
  proto.seed = cell.seed;

  std::vector<BenchRow> rows;
  auto fail_all = [&](const std::string& what) {
    for (const auto& a : cfg.algorithms) {
      BenchRow r = proto;
      r.algorithm = a;
      r.error = what;
      rows.push_back(std::move(r));
    }
    return rows;
  };

  std::optional<AnyInstance> instance;
  try {
    Rng rng(cell.seed);
    DenseInstance::Base base = LinEqInstance::zeros(2, 1);
    if (cfg.family == BenchFamily::kTight) {
      base = tight_pivot_example(cell.n, cell.q);
    } else {
      const auto m = num_pairs(cell.n);
      proto.corruptions = static_cast<std::uint64_t>(std::llround(cell.corruption * m));
      auto p = planted(cell.n, cell.q, proto.corruptions, cfg.kind, rng);
      base = std::visit([](auto&& g) -> DenseInstance::Base { return std::move(g); },
                        std::move(p.instance));
    }
    if (cell.delta > 0.0) {
      instance = sparsify_everywhere_dense(base, cell.delta, rng);
    } else {
      instance = std::visit([](auto&& g) -> AnyInstance { return std::move(g); }, std::move(base));
    }
  } catch (const Error& e) {
    return fail_all(e.what());
  }

  const AnyInstance& g = *instance;
  if (brute_force_space(g) <= cfg.brute_limit) {
    proto.opt_or_lb = std::visit([&](const auto& h) { return brute_force(h, cfg.brute_limit); }, g)
                          .violated;
    proto.opt_exact = true;
  } else {
    Rng rng(derive_seed(cell.seed, 0));
    proto.opt_or_lb = triangle_packing_lb(g, rng).lower_bound();
  }

  for (std::size_t i = 0; i < cfg.algorithms.size(); ++i) {
    BenchRow r = proto;
    r.algorithm = cfg.algorithms[i];
    RunOptions opts;
    opts.seed = derive_seed(cell.seed, i + 1);
    opts.tau = cfg.tau;
    opts.brute_limit = cfg.brute_limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.val = run_algorithm(r.algorithm, g, opts).violated;
    } catch (const Error& e) {
      r.error = e.what();
    }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  cfg.validate();
  std::vector<Cell> cells;
  for (auto n : cfg.ns) {
    for (auto q : cfg.qs) {
      for (double d : cfg.deltas) {
        for (double c : cfg.corruptions) {
          for (std::uint32_t s = 0; s < cfg.seeds; ++s) {
            cells.push_back({n, q, d, c, derive_seed(cfg.root_seed, cells.size())});
          }
        }
      }
    }
  }

  std::vector<std::vector<BenchRow>> results(cells.size());
  unsigned workers = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                      : cfg.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cells.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) results[i] = run_cell(cfg, cells[i]);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  std::vector<BenchRow> rows;
  for (auto& r : results) {
    for (auto& row : r) rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + '"';
}

}  // namespace

void write_bench_row(std::ostream& out, const BenchRow& row) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << csv_field(row.algorithm) << ',' << row.n << ',' << row.q << ',' << row.delta << ','
    << row.seed << ',' << row.corruptions << ',' << row.opt_or_lb << ','
    << (row.opt_exact ? 1 : 0) << ',';
  if (row.val) s << *row.val;
  s << ',';
  if (auto r = row.ratio()) {
    if (std::isinf(*r)) {
      s << "inf";
    } else {
      s << *r;
    }
  }
  s << ',' << std::fixed << std::setprecision(3) << row.elapsed_ms << ',' << csv_field(row.error)
    << '\n';
  out << s.str();
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchHeader << '\n';
  for (const auto& r : rows) write_bench_row(out, r);
}

unsigned threads_from_env() {
  const char* env = std::getenv("UGSOLVE_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') throw InvalidArgument("UGSOLVE_THREADS must be a non-negative integer");
  return static_cast<unsigned>(v);
}

}  // namespace ugsolve
