#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ugsolve/bench.hpp"
#include "ugsolve/certify.hpp"
#include "ugsolve/core.hpp"
#include "ugsolve/error.hpp"
#include "ugsolve/genlab.hpp"
#include "ugsolve/io.hpp"
#include "ugsolve/solvers.hpp"

using namespace ugsolve;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitResource = 4;

struct Output {
  std::string path = "-";
  std::string assign_path;

  bool to_stdout() const { return path == "-"; }

  /// Summary lines go to stderr when stdout carries the instance.
  std::ostream& log() const { return to_stdout() ? std::cerr : std::cout; }
};

void add_output(CLI::App* cmd, Output& out, bool sidecar) {
  cmd->add_option("-o,--out", out.path, "Instance file, '-' for stdout")->capture_default_str();
  if (sidecar) cmd->add_option("--assign-out", out.assign_path, "Write the planted assignment");
}

void emit(const Output& out, const AnyInstance& g, const Assignment* planted,
          std::uint64_t corruptions) {
  if (out.to_stdout()) {
    write_instance(std::cout, g);
  } else {
    save_instance(out.path, g);
  }
  if (planted != nullptr && !out.assign_path.empty()) save_assignment(out.assign_path, *planted);
  auto& log = out.log();
  log << "n " << num_vertices(g) << "\nq " << alphabet_size(g) << "\nm " << num_edges(g)
      << "\ncorruptions " << corruptions << '\n';
}

ConstraintKind parse_kind(const std::string& s) {
  return s == "perm" ? ConstraintKind::kPerm : ConstraintKind::kCyclic;
}

AnyInstance as_any(std::variant<LinEqInstance, UgInstance> g) {
  return std::visit([](auto&& h) -> AnyInstance { return std::move(h); }, std::move(g));
}

DenseInstance::Base as_base(std::variant<LinEqInstance, UgInstance> g) {
  return std::visit([](auto&& h) -> DenseInstance::Base { return std::move(h); }, std::move(g));
}

/// Best two-clustering when exhaustive search is cheap, else everything on side 0.
std::vector<std::uint8_t> clustering_for(const SignedGraph& h) {
  if (h.n() <= 20) return best_two_clustering(h).second;
  return std::vector<std::uint8_t>(h.n(), 0);
}

void print_report(const SolveReport& r, bool json) {
  if (json) {
    nlohmann::json j;
    j["algorithm"] = r.algorithm;
    j["val"] = r.violated;
    j["elapsed_ms"] = r.elapsed.count() * 1000.0;
    if (r.pivot) j["pivot"] = *r.pivot;
    if (r.pivot_label) j["pivot_label"] = *r.pivot_label;
    if (r.seed) j["seed"] = *r.seed;
    j["extras"] = r.extras;
    j["assignment"] = std::vector<Label>(r.assignment.labels().begin(), r.assignment.labels().end());
    std::cout << j.dump() << '\n';
    return;
  }
  std::cout << "algorithm " << r.algorithm << "\nVAL " << r.violated << '\n';
  if (r.pivot) std::cout << "pivot " << *r.pivot << '\n';
  if (r.pivot_label) std::cout << "pivot_label " << *r.pivot_label << '\n';
  if (r.seed) std::cout << "seed " << *r.seed << '\n';
  std::cout << "elapsed_ms " << std::fixed << std::setprecision(3) << r.elapsed.count() * 1000.0
            << '\n';
  std::cout.unsetf(std::ios::floatfield);
  for (const auto& [k, v] : r.extras) std::cout << k << ' ' << v << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unique Games and Min-Lin-Eq(q) solver toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);
  std::uint32_t n = 10;
  Label q = 3;
  std::uint64_t seed = 0;
  std::uint64_t corrupt = 0;
  double p_noise = 0.0;
  double delta = 0.0;
  double p_minus = 0.5;
  std::string kind = "cyclic";
  Output out;

  auto common = [&](CLI::App* c, bool with_seed) {
    c->add_option("--n", n, "Vertices")->capture_default_str();
    c->add_option("--q", q, "Alphabet size")->capture_default_str();
    if (with_seed) c->add_option("--seed", seed, "Random seed")->capture_default_str();
  };
  auto kind_opt = [&](CLI::App* c) {
    c->add_option("--kind", kind, "Constraint kind")
        ->check(CLI::IsMember({"cyclic", "perm"}))
        ->capture_default_str();
  };

  auto* g_planted = gen->add_subcommand("planted", "Planted assignment with corrupted edges");
  common(g_planted, true);
  kind_opt(g_planted);
  g_planted->add_option("--corrupt", corrupt, "Number of corrupted edges")->capture_default_str();
  add_output(g_planted, out, true);

  auto* g_noise = gen->add_subcommand("noise", "Planted cyclic instance with random noise");
  common(g_noise, true);
  g_noise->add_option("--p", p_noise, "Per-edge noise probability")->capture_default_str();
  add_output(g_noise, out, true);

  auto* g_tight = gen->add_subcommand("tight", "Hamilton-cycle instance");
  common(g_tight, false);
  add_output(g_tight, out, false);

  auto* g_dense = gen->add_subcommand("dense", "Planted instance sparsified to a degree floor");
  common(g_dense, true);
  kind_opt(g_dense);
  g_dense->add_option("--corrupt", corrupt, "Corrupted edges before sparsifying")
      ->capture_default_str();
  g_dense->add_option("--delta", delta, "Density slack")->capture_default_str();
  add_output(g_dense, out, true);

  GadgetSpec gadget_spec;
  auto* g_gadget = gen->add_subcommand("gadget", "Validated bipartite gadget on 2 ell vertices");
  g_gadget->add_option("--q", gadget_spec.q, "Alphabet size")->capture_default_str();
  g_gadget->add_option("--ell", gadget_spec.ell, "Side size")->capture_default_str();
  g_gadget->add_option("--seed", gadget_spec.seed, "Random seed")->capture_default_str();
  g_gadget->add_option("--beta", gadget_spec.beta, "Band coefficient")->capture_default_str();
  add_output(g_gadget, out, false);

  auto* g_md2 = gen->add_subcommand("reduce-md2", "Random signed graph encoded with q = 2");
  g_md2->add_option("--n", n, "Vertices")->capture_default_str();
  g_md2->add_option("--p-minus", p_minus, "Probability of a - edge")->capture_default_str();
  g_md2->add_option("--seed", seed, "Random seed")->capture_default_str();
  add_output(g_md2, out, true);

  std::uint32_t pad_m = 2;
  auto* g_pad = gen->add_subcommand("pad-ug", "Random signed graph padded to a UG instance");
  common(g_pad, true);
  g_pad->add_option("--M", pad_m, "Vertices per padding group (even)")->capture_default_str();
  g_pad->add_option("--p-minus", p_minus, "Probability of a - edge")->capture_default_str();
  add_output(g_pad, out, true);

  BlowupSpec blow;
  bool star = false;
  auto* g_blow = gen->add_subcommand("blowup", "Blow-up of a planted dense cyclic instance");
  common(g_blow, true);
  g_blow->add_option("--corrupt", corrupt, "Corrupted base edges")->capture_default_str();
  g_blow->add_option("--delta", delta, "Base density slack")->capture_default_str();
  g_blow->add_option("--k", blow.k, "Copies per vertex")->capture_default_str();
  g_blow->add_option("--beta", blow.gadget_beta, "Gadget band coefficient")->capture_default_str();
  g_blow->add_flag("--star", star, "Leave the gadget blocks out");
  add_output(g_blow, out, false);

  // solve
  auto* solve = app.add_subcommand("solve", "Run one algorithm on an instance file");
  std::string instance_path;
  std::string alg = "voting";
  RunOptions run;
  std::string assign_out;
  bool json = false;
  solve->add_option("instance", instance_path, "Instance file")->required();
  solve->add_option("--alg", alg, "Algorithm")
      ->check(CLI::IsMember(algorithm_names()))
      ->capture_default_str();
  solve->add_option("--seed", run.seed, "Seed for randomized algorithms")->capture_default_str();
  solve->add_option("--tau", run.tau, "PTAS accuracy")->capture_default_str();
  solve->add_option("--threads", run.threads, "Pivot-loop threads (0 = all cores)")
      ->capture_default_str();
  solve->add_option("--brute-limit", run.brute_limit, "Brute-force search-space cap")
      ->capture_default_str();
  solve->add_option("--assign-out", assign_out, "Write the assignment file");
  solve->add_flag("--json", json, "Print the report as JSON");

  // verify
  auto* verify = app.add_subcommand("verify", "Count violated constraints of an assignment");
  std::string assign_path;
  std::optional<std::uint64_t> expect;
  verify->add_option("instance", instance_path, "Instance file")->required();
  verify->add_option("assignment", assign_path, "Assignment file")->required();
  verify->add_option("--expect", expect, "Exit 1 unless the count equals this");

  // certify
  auto* certify = app.add_subcommand("certify", "Triangle-packing lower bound");
  std::optional<std::uint64_t> val;
  std::string cert_out;
  std::uint64_t cert_seed = 0;
  certify->add_option("instance", instance_path, "Instance file")->required();
  certify->add_option("--seed", cert_seed, "Packing order seed")->capture_default_str();
  certify->add_option("--val", val, "Report VAL / LB for this value");
  certify->add_option("--cert-out", cert_out, "Write the certificate file");

  // bench
  auto* bench = app.add_subcommand("bench", "Parameter sweep as CSV");
  BenchConfig cfg;
  std::string family = "planted";
  std::string bench_out = "-";
  bench->add_option("--family", family, "Instance family")
      ->check(CLI::IsMember({"planted", "tight"}))
      ->capture_default_str();
  kind_opt(bench);
  bench->add_option("--n", cfg.ns, "Vertex counts")->required()->delimiter(',');
  bench->add_option("--q", cfg.qs, "Alphabet sizes")->required()->delimiter(',');
  bench->add_option("--delta", cfg.deltas, "Density slacks")->delimiter(',');
  bench->add_option("--corrupt", cfg.corruptions, "Corrupted fractions of m")->delimiter(',');
  bench->add_option("--seeds", cfg.seeds, "Seeds per cell")->capture_default_str();
  bench->add_option("--seed", cfg.root_seed, "Root seed")->capture_default_str();
  bench->add_option("--alg", cfg.algorithms, "Algorithms")->required()->delimiter(',');
  bench->add_option("--tau", cfg.tau, "PTAS accuracy")->capture_default_str();
  bench->add_option("--brute-limit", cfg.brute_limit, "Brute-force cap for the OPT column")
      ->capture_default_str();
  bench->add_option("--out", bench_out, "CSV path, '-' for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (g_planted->parsed() || g_noise->parsed() || g_dense->parsed()) {
        Rng rng(seed);
        auto p = g_noise->parsed() ? noise_model(n, q, p_noise, rng)
                                   : planted(n, q, corrupt, parse_kind(kind), rng);
        const auto corruptions = p.corrupted.size();
        if (g_dense->parsed()) {
          AnyInstance g = sparsify_everywhere_dense(as_base(std::move(p.instance)), delta, rng);
          emit(out, g, &p.planted, corruptions);
        } else {
          emit(out, as_any(std::move(p.instance)), &p.planted, corruptions);
        }
      } else if (g_tight->parsed()) {
        emit(out, tight_pivot_example(n, q), nullptr, 0);
      } else if (g_gadget->parsed()) {
        auto gad = bipartite_gadget(gadget_spec);
        const std::uint32_t ell = gad.ell;
        std::vector<std::uint8_t> present;
        for (Vertex a = 0; a < 2 * ell; ++a) {
          for (Vertex b = a + 1; b < 2 * ell; ++b) present.push_back(a < ell && b >= ell);
        }
        auto lin = LinEqInstance::from_function(2 * ell, gad.q, [&](Vertex a, Vertex b) -> Label {
          return a < ell && b >= ell ? gad.offset(a, b - ell) : 0;
        });
        const double d = 1.0 - static_cast<double>(ell) / (2 * ell - 1);
        emit(out, DenseInstance(std::move(lin), std::move(present), d), nullptr, 0);
        const auto& r = gad.report;
        out.log() << "exhaustive " << r.exhaustive << "\nmin_satisfied " << r.min_satisfied
                  << "\nmax_satisfied " << r.max_satisfied << "\nband " << r.band_lo << ' '
                  << r.band_hi << "\nattempts " << r.attempts << '\n';
      } else if (g_md2->parsed()) {
        Rng rng(seed);
        auto h = SignedGraph::random(n, p_minus, rng);
        auto side = clustering_for(h);
        Assignment a(std::vector<Label>(side.begin(), side.end()));
        emit(out, reduce_mindisagree2(h), &a, mindisagree2_cost(h, side));
      } else if (g_pad->parsed()) {
        Rng rng(seed);
        auto h = SignedGraph::random(n, p_minus, rng);
        auto side = clustering_for(h);
        auto padded = pad_to_ug(h, q, pad_m, side);
        const auto cost = violated_count(padded.instance, padded.intended);
        emit(out, std::move(padded.instance), &padded.intended, cost);
      } else if (g_blow->parsed()) {
        Rng rng(seed);
        auto p = planted(n, q, corrupt, ConstraintKind::kCyclic, rng);
        auto base = sparsify_everywhere_dense(as_base(std::move(p.instance)), delta, rng);
        blow.seed = derive_seed(seed, 1);
        if (star) {
          emit(out, blow_up_star(base, blow), nullptr, p.corrupted.size());
        } else {
          emit(out, blow_up(base, blow), nullptr, p.corrupted.size());
        }
      }
      return 0;
    }

    if (solve->parsed()) {
      const AnyInstance g = load_instance(instance_path);
      const SolveReport r = run_algorithm(alg, g, run);
      print_report(r, json);
      if (!assign_out.empty()) save_assignment(assign_out, r.assignment);
      return 0;
    }

    if (verify->parsed()) {
      const AnyInstance g = load_instance(instance_path);
      const Assignment a = load_assignment(assign_path);
      a.check(num_vertices(g), alphabet_size(g));
      const auto bad = violated_count(g, a);
      std::cout << "violated " << bad << '\n';
      if (expect && *expect != bad) {
        std::cerr << "expected " << *expect << ", got " << bad << '\n';
        return kExitMismatch;
      }
      return 0;
    }

    if (certify->parsed()) {
      const AnyInstance g = load_instance(instance_path);
      Rng rng(cert_seed);
      const auto cert = triangle_packing_lb(g, rng);
      std::cout << "inconsistent_triangles " << inconsistent_triangles(g) << "\nLB "
                << cert.lower_bound() << '\n';
      if (val) {
        std::cout << "ratio ";
        if (cert.lower_bound() == 0) {
          std::cout << (*val == 0 ? "1" : "inf") << '\n';
        } else {
          std::cout << static_cast<double>(*val) / static_cast<double>(cert.lower_bound()) << '\n';
        }
      }
      if (!cert_out.empty()) {
        std::ofstream f(cert_out);
        write_certificate(f, cert);
        if (!f) throw Error("cannot write '" + cert_out + "'");
      }
      return 0;
    }

    if (bench->parsed()) {
      cfg.family = family == "tight" ? BenchFamily::kTight : BenchFamily::kPlanted;
      cfg.kind = parse_kind(kind);
      cfg.threads = threads_from_env();
      const auto rows = run_bench(cfg);
      if (bench_out == "-") {
        write_bench_csv(std::cout, rows);
      } else {
        std::ofstream f(bench_out);
        write_bench_csv(f, rows);
        if (!f) throw Error("cannot write '" + bench_out + "'");
      }
      return 0;
    }
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const OutOfRegime& e) {
    std::cerr << "out of regime: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
