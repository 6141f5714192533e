// Acceptance suite: one PASS/FAIL line per criterion, detail lines indented.
// Usage: ugsolve_acceptance [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "ugsolve/certify.hpp"
#include "ugsolve/core.hpp"
#include "ugsolve/genlab.hpp"
#include "ugsolve/ptas.hpp"
#include "ugsolve/solvers.hpp"

using namespace ugsolve;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> notes;
};

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

using Complete = std::variant<LinEqInstance, UgInstance>;

std::uint64_t opt_of(const Complete& g) {
  return std::visit([](const auto& h) { return brute_force(h).violated; }, g);
}

Complete planted_complete(std::uint32_t n, Label q, std::uint64_t corrupt, ConstraintKind kind,
                          std::uint64_t seed) {
  Rng rng(seed);
  return planted(n, q, std::min<std::uint64_t>(corrupt, num_pairs(n)), kind, rng).instance;
}

/// Lower bounds checked against optima gathered by criteria 2, 4 and 7.
struct CertificateLog {
  std::uint64_t checked = 0;
  std::uint64_t lb_violations = 0;
  std::uint64_t complete_checked = 0;
  std::uint64_t iff_violations = 0;
  std::uint64_t iff_violations_perm = 0;

  void record(const AnyInstance& g, std::uint64_t opt, std::uint64_t seed, bool complete) {
    Rng rng(seed);
    const auto cert = triangle_packing_lb(g, rng);
    ++checked;
    if (cert.lower_bound() > opt || !verify_certificate(g, cert)) ++lb_violations;
    if (complete) {
      ++complete_checked;
      if ((inconsistent_triangles(g) == 0) != (opt == 0)) {
        ++iff_violations;
        if (std::holds_alternative<UgInstance>(g)) ++iff_violations_perm;
      }
    }
  }
};

CertificateLog g_certificates;

AnyInstance as_any(const Complete& g) {
  return std::visit([](const auto& h) -> AnyInstance { return h; }, g);
}

// 1 -------------------------------------------------------------------------
Outcome exactness_on_satisfiable() {
  const auto start = Clock::now();
  std::uint64_t runs = 0, nonzero = 0;
  for (std::uint32_t n : {3u, 5u, 10u, 50u}) {
    for (Label q : {1u, 2u, 3u, 7u}) {
      for (auto kind : {ConstraintKind::kCyclic, ConstraintKind::kPerm}) {
        for (std::uint64_t s = 0; s < 100; ++s) {
          const std::uint64_t seed = derive_seed(1, (n * 100 + q) * 1000 + s * 2 + (kind == ConstraintKind::kPerm));
          const auto g = planted_complete(n, q, 0, kind, seed);
          std::visit(
              [&](const auto& h) {
                Rng rv(derive_seed(seed, 1)), rg(derive_seed(seed, 2));
                PtasConfig cfg;
                cfg.seed = derive_seed(seed, 3);
                const std::uint64_t vals[] = {pivot_best(h).violated, voting_solve(h).violated,
                                              randomized_voting(h, rv).violated,
                                              greedy_max(h, rg).violated,
                                              ptas_solve(h, cfg).violated};
                for (auto v : vals) {
                  ++runs;
                  nonzero += v != 0;
                }
              },
              g);
        }
      }
    }
  }
  const double t = seconds_since(start);
  return {nonzero == 0 && t < 60.0,
          fmt("%llu solver runs on satisfiable instances, %llu nonzero, %.1f s (limit 60 s)",
              (unsigned long long)runs, (unsigned long long)nonzero, t)};
}

// 2 -------------------------------------------------------------------------
Outcome pivot_three_approximation() {
  const auto start = Clock::now();
  std::uint64_t count = 0, bad_ratio = 0, bad_eps = 0;
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 600; ++s) {
    const std::uint32_t n = 4 + s % 5;
    const Label q = 2 + (s / 5) % 2;
    const std::uint64_t corrupt = (s / 10) % 5;
    const auto kind = (s / 50) % 2 ? ConstraintKind::kPerm : ConstraintKind::kCyclic;
    const auto seed = derive_seed(2, s);
    const auto g = planted_complete(n, q, corrupt, kind, seed);
    const auto opt = opt_of(g);
    const auto val = std::visit([](const auto& h) { return pivot_best(h).violated; }, g);
    ++count;
    if (val > 3 * opt) ++bad_ratio;
    // eps m + eps (n-1)^2 with eps = OPT/m, scaled by n
    if (val * n > opt * n + 2 * opt * (n - 1)) ++bad_eps;
    if (opt > 0) worst = std::max(worst, static_cast<double>(val) / opt);
    g_certificates.record(as_any(g), opt, derive_seed(seed, 9), true);
  }
  const double t = seconds_since(start);
  return {count >= 500 && bad_ratio == 0 && bad_eps == 0 && t < 300.0,
          fmt("%llu instances, %llu exceed 3*OPT, %llu exceed eps*m+eps*(n-1)^2, worst ratio %.3f, "
              "%.1f s",
              (unsigned long long)count, (unsigned long long)bad_ratio,
              (unsigned long long)bad_eps, worst, t)};
}

// 3 -------------------------------------------------------------------------
Outcome tight_example() {
  Outcome o;
  bool all_equal_3n12 = true;
  for (std::uint32_t n : {10u, 20u, 40u, 100u}) {
    const auto g = tight_pivot_example(n, 3);
    std::set<std::uint64_t> values;
    for (Vertex p = 0; p < n; ++p) values.insert(violated_count(g, pivot_assign(g, p)));
    const auto g2 = tight_pivot_example(n, 2);
    std::set<std::uint64_t> values2;
    for (Vertex p = 0; p < n; ++p) values2.insert(violated_count(g2, pivot_assign(g2, p)));
    const bool ok = values.size() == 1 && *values.begin() == 3 * n - 12;
    all_equal_3n12 = all_equal_3n12 && ok;
    o.notes.push_back(fmt("n=%u q=3: every pivot VAL=%llu (expected 3n-12=%u, 3n-9=%u), "
                          "ratio vs all-equal bound n: %.2f | q=2: every pivot VAL=%llu",
                          n, (unsigned long long)*values.rbegin(), 3 * n - 12, 3 * n - 9,
                          static_cast<double>(*values.rbegin()) / n,
                          (unsigned long long)*values2.rbegin()));
  }
  const auto opt = brute_force(tight_pivot_example(10, 3)).violated;
  o.notes.push_back(fmt("n=10 q=3 brute-force OPT=%llu (expected 10)", (unsigned long long)opt));
  o.notes.push_back("3n-12 holds for q=2 only; for q>=3 three more edges around the pivot are "
                    "violated (see decisions ledger)");
  o.pass = all_equal_3n12 && opt == 10;
  o.summary = fmt("every pivot yields 3n-12 at q=3 for n in {10,20,40,100}: %s; OPT(10)=%llu",
                  all_equal_3n12 ? "yes" : "no", (unsigned long long)opt);
  return o;
}

// 4 -------------------------------------------------------------------------
Outcome voting_excess_bound() {
  const auto start = Clock::now();
  std::uint64_t count = 0, violations = 0, skipped = 0;
  double max_used = 0.0;
  for (std::uint64_t s = 0; count < 330 && s < 2000; ++s) {
    const std::uint32_t n = 6 + s % 5;
    const Label q = std::array<Label, 3>{2, 3, 5}[(s / 5) % 3];
    const auto kind = (s / 15) % 2 ? ConstraintKind::kPerm : ConstraintKind::kCyclic;
    if (kind == ConstraintKind::kPerm && q == 5 && n > 9) continue;
    const auto m = num_pairs(n);
    const auto seed = derive_seed(4, s);
    const std::uint64_t corrupt = Rng(seed ^ 0x5eed).below(m / 4 + 1);
    const auto g = planted_complete(n, q, corrupt, kind, seed);
    const auto opt = opt_of(g);
    if (2 * opt >= m) {
      ++skipped;
      continue;
    }
    const auto val = std::visit([](const auto& h) { return voting_solve(h).violated; }, g);
    const double bound = voting_bound(opt, n, m);
    ++count;
    if (static_cast<double>(val - opt) > bound) ++violations;
    if (bound > 0) max_used = std::max(max_used, (val - opt) / bound);
    g_certificates.record(as_any(g), opt, derive_seed(seed, 9), true);
  }
  const double t = seconds_since(start);
  return {count >= 300 && violations == 0 && t < 600.0,
          fmt("%llu in-regime instances (%llu skipped, eps>=1/2), %llu exceed the excess bound, "
              "max excess/bound %.3f, %.1f s",
              (unsigned long long)count, (unsigned long long)skipped,
              (unsigned long long)violations, max_used, t)};
}

// 5 -------------------------------------------------------------------------
Outcome square_equivalence() {
  std::uint64_t count = 0, mismatched = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const std::uint32_t n = 5 + s % 26;
    const Label q = std::array<Label, 3>{2, 3, 5}[s % 3];
    Rng rng(derive_seed(5, s));
    const LinEqInstance g =
        s % 2 ? LinEqInstance::from_function(n, q, [&](Vertex, Vertex) { return rng.below(q); })
              : std::get<LinEqInstance>(
                    planted(n, q, rng.below(num_pairs(n) / 3 + 1), ConstraintKind::kCyclic, rng)
                        .instance);
    const auto voting = voting_solve(g);
    const auto squared = pivot_best(to_square_instance(g), g);
    ++count;
    if (voting.assignment != squared.assignment || voting.violated != squared.violated) ++mismatched;
  }
  return {mismatched == 0, fmt("%llu LinEq instances (n 5..30, q 2/3/5), %llu mismatches",
                               (unsigned long long)count, (unsigned long long)mismatched)};
}

// 6 -------------------------------------------------------------------------
Outcome randomized_voting_probability() {
  Outcome o;
  double worst = 1.0;
  bool exact_available = true;
  for (std::uint64_t i = 0; i < 5; ++i) {
    const std::uint32_t n = 40;
    const auto m = num_pairs(n);
    const std::uint64_t corrupt = 16;  // 16/780 ~ 0.02
    const auto kind = i < 3 ? ConstraintKind::kCyclic : ConstraintKind::kPerm;
    const auto g = planted_complete(n, 3, corrupt, kind, derive_seed(6, i));
    const auto any = as_any(g);
    const bool exact = brute_force_space(any) <= kBruteForceLimit;
    exact_available = exact_available && exact;
    Rng cert_rng(derive_seed(6, 100 + i));
    const std::uint64_t lb = exact ? opt_of(g) : triangle_packing_lb(any, cert_rng).lower_bound();
    const double bound = randomized_voting_bound(lb, n, m);
    std::uint64_t good = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
      Rng rng(derive_seed(derive_seed(6, i), s));
      const auto val =
          std::visit([&](const auto& h) { return randomized_voting(h, rng).violated; }, g);
      if (static_cast<double>(val) <= static_cast<double>(lb) + bound) ++good;
    }
    const double frac = good / 200.0;
    worst = std::min(worst, frac);
    o.notes.push_back(fmt("instance %llu (%s): %s=%llu, eps_hat=%.4f, VAL <= %s + %.3f in %.3f "
                          "of 200 runs",
                          (unsigned long long)i, kind == ConstraintKind::kCyclic ? "cyclic" : "perm",
                          exact ? "OPT" : "packing LB", (unsigned long long)lb,
                          static_cast<double>(lb) / m, exact ? "OPT" : "LB", bound, frac));
  }
  o.pass = worst >= 0.35;
  o.summary = fmt("5 planted n=40 q=3 instances x 200 seeds, worst success fraction %.3f "
                  "(need >= 0.35); eps_hat from %s",
                  worst, exact_available ? "brute force" : "packing lower bound");
  return o;
}

// 7 -------------------------------------------------------------------------
Outcome dense_voting_bound_check() {
  const auto start = Clock::now();
  std::uint64_t count = 0, violations = 0, skipped = 0;
  for (std::uint64_t s = 0; count < 220 && s < 3000; ++s) {
    const std::uint32_t n = 7 + s % 3;
    const Label q = 2 + (s / 3) % 2;
    const double delta = std::array<double, 3>{0.1, 0.2, 0.25}[(s / 6) % 3];
    const auto kind = (s / 18) % 2 ? ConstraintKind::kPerm : ConstraintKind::kCyclic;
    const auto seed = derive_seed(7, s);
    Rng rng(seed);
    const std::uint64_t corrupt = rng.below(4);
    auto p = planted(n, q, corrupt, kind, rng);
    const auto base = std::visit([](auto&& g) -> DenseInstance::Base { return g; }, p.instance);
    const auto d = sparsify_everywhere_dense(base, delta, rng);
    const auto opt = brute_force(d).violated;
    const auto m = d.num_edges();
    const double eps = static_cast<double>(opt) / m;
    if (!(1.0 - 2.0 * eps - 2.0 * delta > 0.0)) {
      ++skipped;
      continue;
    }
    const auto val = dense_voting(d).violated;
    ++count;
    if (static_cast<double>(val - opt) > dense_voting_bound(opt, n, m, delta)) ++violations;
    g_certificates.record(d, opt, derive_seed(seed, 9), false);
  }
  const double t = seconds_since(start);
  return {count >= 200 && violations == 0,
          fmt("%llu dense instances (n 7..9, q 2/3, delta <= 0.25; %llu out of regime skipped), "
              "%llu exceed the bound, %.1f s",
              (unsigned long long)count, (unsigned long long)skipped,
              (unsigned long long)violations, t)};
}

// 8 -------------------------------------------------------------------------
Outcome certificates() {
  const auto& c = g_certificates;
  Outcome o;
  o.pass = c.checked > 0 && c.lb_violations == 0 && c.iff_violations == 0;
  o.summary = fmt("%llu certificates from criteria 2/4/7, %llu with LB > OPT or invalid; "
                  "%llu complete instances, %llu where (no inconsistent triangle) != (OPT = 0)",
                  (unsigned long long)c.checked, (unsigned long long)c.lb_violations,
                  (unsigned long long)c.complete_checked, (unsigned long long)c.iff_violations);
  o.notes.push_back(fmt("equivalence failures on permutation instances: %llu, on cyclic: %llu",
                        (unsigned long long)c.iff_violations_perm,
                        (unsigned long long)(c.iff_violations - c.iff_violations_perm)));
  if (c.iff_violations_perm > 0) {
    o.notes.push_back("with q >= 3 permutations, every triangle can be satisfiable while no "
                      "global labeling is (see decisions ledger)");
  }
  return o;
}

// 9 -------------------------------------------------------------------------
Outcome constructions() {
  Outcome o;
  // (a)
  std::uint64_t md_bad = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(derive_seed(91, s));
    const std::uint32_t n = 2 + s % 7;
    const auto h = SignedGraph::random(n, 0.5, rng);
    std::vector<std::vector<bool>> neg(n, std::vector<bool>(n, false));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) neg[u][v] = u != v && h.negative(u, v);
    }
    if (brute_force(reduce_mindisagree2(h)).violated != oracle::min_disagreements(neg)) ++md_bad;
  }
  // (b)
  std::uint64_t pad_bad = 0;
  for (auto [n, q, M] : {std::tuple{4u, 3u, 4u}, {5u, 4u, 6u}, {6u, 5u, 8u}}) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      Rng rng(derive_seed(92, n * 10 + s));
      const auto h = SignedGraph::random(n, 0.5, rng);
      std::vector<std::uint8_t> side(n);
      for (auto& b : side) b = static_cast<std::uint8_t>(rng.below(2));
      const auto padded = pad_to_ug(h, q, M, side);
      const auto expect = mindisagree2_cost(h, side) + n * M * (q - 2) / 2;
      if (violated_count(padded.instance, padded.intended) != expect) ++pad_bad;
    }
  }
  // (c)
  std::uint64_t blow_bad = 0, blow_cases = 0;
  for (std::uint32_t n : {3u, 4u}) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      Rng rng(derive_seed(93, n * 100 + s));
      const auto base = LinEqInstance::from_function(n, 2, [&](Vertex, Vertex) { return rng.below(2); });
      std::vector<std::uint8_t> present(num_pairs(n), 1);
      present[rng.below(present.size())] = 0;
      const DenseInstance g(base, present, 0.5);
      const auto star = blow_up_star(g, {2, s});
      ++blow_cases;
      if (brute_force(star).violated != 4 * brute_force(g).violated) ++blow_bad;
    }
  }
  // (d)
  bool mean_exact = true;
  std::uint64_t in_band = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(derive_seed(seed, 0));
    const auto gadget = sample_gadget(3, 6, rng);
    const auto r = measure_gadget(gadget, kDefaultGadgetBeta, rng);
    if (r.passed) ++in_band;
    if (seed <= 3) {
      // independent full enumeration of all 3^12 labelings
      std::uint64_t total = 0, labelings = 0;
      std::vector<Label> x(12, 0);
      while (true) {
        for (std::uint32_t i = 0; i < 6; ++i) {
          for (std::uint32_t j = 0; j < 6; ++j) total += (x[i] + 3 - x[6 + j]) % 3 == gadget.offset(i, j);
        }
        ++labelings;
        std::size_t k = 0;
        while (k < 12 && ++x[k] == 3) x[k++] = 0;
        if (k == 12) break;
      }
      mean_exact = mean_exact && total == 12 * labelings && r.total_satisfied == total;
    } else {
      mean_exact = mean_exact && r.total_satisfied == 12 * r.labelings;
    }
  }
  o.notes.push_back(fmt("(a) 50 signed graphs n<=8: %llu mismatches", (unsigned long long)md_bad));
  o.notes.push_back(fmt("(b) padding cost formula, 15 cases: %llu mismatches", (unsigned long long)pad_bad));
  o.notes.push_back(fmt("(c) star blow-up identity, %llu cases: %llu mismatches",
                        (unsigned long long)blow_cases, (unsigned long long)blow_bad));
  o.notes.push_back(fmt("(d) mean satisfied = 12 exactly: %s; extremes in beta=%.3f band: %llu/20",
                        mean_exact ? "yes" : "no", kDefaultGadgetBeta, (unsigned long long)in_band));
  o.pass = md_bad == 0 && pad_bad == 0 && blow_bad == 0 && mean_exact && in_band >= 18;
  o.summary = "reduction, padding, blow-up and gadget checks";
  return o;
}

// 10 ------------------------------------------------------------------------
double time_once(const std::function<void()>& f) {
  const auto start = Clock::now();
  f();
  return seconds_since(start);
}

/// Best times of two workloads, measured alternately.
std::pair<double, double> best_times(int repeats, const std::function<void()>& a,
                                     const std::function<void()>& b) {
  a();
  b();
  double ta = INFINITY, tb = INFINITY;
  for (int r = 0; r < repeats; ++r) {
    ta = std::min(ta, time_once(a));
    tb = std::min(tb, time_once(b));
  }
  return {ta, tb};
}

Outcome performance() {
  Outcome o;
  auto lineq = [](std::uint32_t n, std::uint64_t seed) {
    Rng rng(seed);
    return LinEqInstance::from_function(n, 5, [&](Vertex, Vertex) { return rng.below(5); });
  };
  const auto g150 = lineq(150, 1), g300 = lineq(300, 2);
  const auto [v150, v300] =
      best_times(9, [&] { voting_solve(g150); }, [&] { voting_solve(g300); });
  const auto g1000 = lineq(1000, 3), g2000 = lineq(2000, 4);
  Rng r1(5), r2(6);
  const auto [r1000, r2000] = best_times(
      15, [&] { randomized_voting(g1000, r1); }, [&] { randomized_voting(g2000, r2); });
  // q^(n-1) = 10^8 exactly
  const auto hard10 = [&] {
    Rng rng(8);
    return LinEqInstance::from_function(9, 10, [&](Vertex, Vertex) { return rng.below(10); });
  }();
  const auto bf_start = Clock::now();
  const auto bf = brute_force(hard10);
  const double tb = seconds_since(bf_start);
  const double fv = v300 / v150, fr = r2000 / r1000;
  o.notes.push_back(fmt("voting n=150: %.3f s, n=300: %.3f s (limit 10 s), factor %.2f (want 5..12)",
                        v150, v300, fv));
  o.notes.push_back(fmt("rvoting n=1000: %.4f s, n=2000: %.4f s (limit 10 s), factor %.2f (want 2.5..6)",
                        r1000, r2000, fr));
  o.notes.push_back(fmt("brute force n=9 q=10 (space 1e8): OPT=%llu in %.2f s (limit 300 s)",
                        (unsigned long long)bf.violated, tb));
  o.pass = v300 < 10.0 && r2000 < 10.0 && tb < 300.0 && fv >= 5.0 && fv <= 12.0 && fr >= 2.5 &&
           fr <= 6.0;
  o.summary = "runtime limits and scaling factors";
  return o;
}

// 11 ------------------------------------------------------------------------
Outcome ptas_empirical() {
  std::uint64_t count = 0, within = 0, min_mismatch = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const std::uint32_t n = 4 + s % 5;
    const Label q = 2 + (s / 5) % 2;
    const auto kind = (s / 10) % 2 ? ConstraintKind::kPerm : ConstraintKind::kCyclic;
    const auto seed = derive_seed(11, s);
    const auto g = planted_complete(n, q, Rng(seed ^ 0xabc).below(num_pairs(n) / 3 + 1), kind, seed);
    const auto opt = opt_of(g);
    PtasConfig cfg;
    cfg.tau = 0.5;
    cfg.seed = derive_seed(seed, 1);
    std::visit(
        [&](const auto& h) {
          const auto r = ptas_solve(h, cfg);
          Rng rng(cfg.seed);
          const auto expect =
              std::min(voting_solve(h).violated, greedy_max(h, rng, cfg.greedy_restarts).violated);
          ++count;
          if (r.violated != expect) ++min_mismatch;
          if (2 * r.violated <= 3 * opt) ++within;
        },
        g);
  }
  const double frac = static_cast<double>(within) / count;
  return {frac >= 0.99 && min_mismatch == 0,
          fmt("%llu instances: VAL <= 1.5*OPT in %.3f (need >= 0.99); %llu where VAL != "
              "min(voting, greedy)",
              (unsigned long long)count, frac, (unsigned long long)min_mismatch)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"exactness on satisfiable input", exactness_on_satisfiable},
      {"pivot 3-approximation", pivot_three_approximation},
      {"tight pivot example", tight_example},
      {"voting excess bound", voting_excess_bound},
      {"voting = pivot on squared instance", square_equivalence},
      {"randomized voting success rate", randomized_voting_probability},
      {"dense voting bound", dense_voting_bound_check},
      {"triangle-packing certificates", certificates},
      {"reduction and gadget constructions", constructions},
      {"performance", performance},
      {"PTAS empirical ratio", ptas_empirical},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  // Criterion 8 reuses the instances of 2, 4 and 7.
  if (only.count(8)) only.insert({2, 4, 7});

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  C%-2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first,
                o.summary.c_str());
    for (const auto& note : o.notes) std::printf("        %s\n", note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
