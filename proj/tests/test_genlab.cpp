#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "ugsolve/core.hpp"
#include "ugsolve/error.hpp"
#include "ugsolve/genlab.hpp"
#include "ugsolve/solvers.hpp"

using namespace ugsolve;

TEST(Planted, CorruptedListIsExact) {
  Rng rng(1);
  for (auto kind : {ConstraintKind::kCyclic, ConstraintKind::kPerm}) {
    for (std::uint64_t c : {0u, 1u, 5u, 21u}) {
      auto p = planted(7, 3, c, kind, rng);
      EXPECT_EQ(p.corrupted.size(), c);
      std::visit(
          [&](const auto& g) {
            EXPECT_EQ(violated_count(g, p.planted), c);
            for (const auto& e : p.corrupted) {
              EXPECT_FALSE(g.satisfied(e.u, e.v, p.planted[e.u], p.planted[e.v]));
            }
          },
          p.instance);
    }
  }
}

TEST(Planted, SingleCorruptionHasOptimumOne) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    auto p = planted(6, 3, 1, ConstraintKind::kCyclic, rng);
    EXPECT_EQ(oracle::opt(oracle::from_lineq(std::get<LinEqInstance>(p.instance))), 1u);
  }
}

TEST(Planted, RejectsImpossibleRequests) {
  Rng rng(2);
  EXPECT_THROW(planted(4, 3, 7, ConstraintKind::kCyclic, rng), InvalidArgument);
  EXPECT_THROW(planted(4, 1, 1, ConstraintKind::kCyclic, rng), InvalidArgument);
  EXPECT_NO_THROW(planted(4, 1, 0, ConstraintKind::kPerm, rng));
}

TEST(Planted, PureFunctionOfSeed) {
  Rng a(9), b(9);
  auto pa = planted(10, 4, 6, ConstraintKind::kPerm, a);
  auto pb = planted(10, 4, 6, ConstraintKind::kPerm, b);
  EXPECT_EQ(pa.instance, pb.instance);
  EXPECT_EQ(pa.planted, pb.planted);
}

TEST(Noise, Extremes) {
  Rng rng(3);
  auto clean = noise_model(9, 4, 0.0, rng);
  EXPECT_EQ(violated_count(std::get<LinEqInstance>(clean.instance), clean.planted), 0u);
  auto flipped = noise_model(9, 2, 1.0, rng);
  EXPECT_EQ(violated_count(std::get<LinEqInstance>(flipped.instance), flipped.planted), 36u);
  EXPECT_THROW(noise_model(9, 2, 1.5, rng), InvalidArgument);
}

TEST(Noise, CorruptedFractionConcentrates) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    auto p = noise_model(200, 5, 0.05, rng);
    const double frac = static_cast<double>(p.corrupted.size()) / num_pairs(200);
    EXPECT_NEAR(frac, 0.05, 0.01);
    EXPECT_EQ(violated_count(std::get<LinEqInstance>(p.instance), p.planted), p.corrupted.size());
  }
}

TEST(Tight, Construction) {
  auto g = tight_pivot_example(6, 4);
  EXPECT_EQ(g.offset(0, 1), 1u);
  EXPECT_EQ(g.offset(4, 5), 1u);
  EXPECT_EQ(g.offset(5, 0), 1u);
  EXPECT_EQ(g.offset(0, 2), 0u);
  EXPECT_THROW(tight_pivot_example(4, 3), InvalidArgument);
  EXPECT_THROW(tight_pivot_example(6, 1), InvalidArgument);
}

TEST(Sparsify, DegreeFloorHolds) {
  Rng rng(4);
  auto none = sparsify_everywhere_dense(LinEqInstance::zeros(9, 2), 0.0, rng);
  EXPECT_EQ(none.num_edges(), 36u);
  auto d = sparsify_everywhere_dense(LinEqInstance::zeros(9, 2), 0.25, rng);
  for (Vertex v = 0; v < 9; ++v) EXPECT_GE(d.degree(v), 6u);
  EXPECT_LT(d.num_edges(), 36u);
  EXPECT_THROW(sparsify_everywhere_dense(LinEqInstance::zeros(9, 2), 1.0, rng), InvalidArgument);
}

TEST(MinDisagree, ReductionPreservesCost) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 3 + trial % 6;
    auto h = SignedGraph::random(n, 0.4, rng);
    std::vector<std::vector<bool>> neg(n, std::vector<bool>(n, false));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) neg[u][v] = u != v && h.negative(u, v);
    }
    const auto g = reduce_mindisagree2(h);
    EXPECT_EQ(brute_force(g).violated, oracle::min_disagreements(neg));
    EXPECT_EQ(best_two_clustering(h).first, oracle::min_disagreements(neg));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::uint8_t> side(n);
      std::vector<Label> x(n);
      for (Vertex v = 0; v < n; ++v) x[v] = side[v] = (mask >> v) & 1;
      EXPECT_EQ(mindisagree2_cost(h, side), violated_count(g, Assignment(x)));
    }
  }
}

TEST(MinDisagree, SmallCases) {
  auto all_plus = SignedGraph(5, std::vector<std::uint8_t>(10, 0));
  EXPECT_EQ(brute_force(reduce_mindisagree2(all_plus)).violated, 0u);
  auto tri = SignedGraph(3, {0, 1, 0});
  EXPECT_EQ(brute_force(reduce_mindisagree2(tri)).violated, 1u);
}

TEST(Padding, IntendedCostFormula) {
  Rng rng(6);
  for (auto [n, q, M] : {std::tuple{4u, 3u, 4u}, {5u, 4u, 6u}, {6u, 5u, 8u}, {3u, 3u, 2u}}) {
    auto h = SignedGraph::random(n, 0.5, rng);
    std::vector<std::uint8_t> side(n);
    for (auto& s : side) s = static_cast<std::uint8_t>(rng.below(2));
    auto padded = pad_to_ug(h, q, M, side);
    EXPECT_EQ(padded.instance.n(), n + (q - 2) * M);
    EXPECT_EQ(violated_count(padded.instance, padded.intended),
              mindisagree2_cost(h, side) + n * M * (q - 2) / 2);
  }
}

TEST(Padding, AllPlusSmallCase) {
  SignedGraph h(4, std::vector<std::uint8_t>(6, 0));
  auto padded = pad_to_ug(h, 3, 4, std::vector<std::uint8_t>(4, 0));
  EXPECT_EQ(violated_count(padded.instance, padded.intended), 8u);
}

TEST(Padding, GroupEdgesSatisfiedByIntended) {
  Rng rng(7);
  auto h = SignedGraph::random(4, 0.5, rng);
  auto padded = pad_to_ug(h, 5, 4, std::vector<std::uint8_t>(4, 1));
  const auto& g = padded.instance;
  for (Vertex u = 4; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      EXPECT_TRUE(g.satisfied(u, v, padded.intended[u], padded.intended[v]));
    }
  }
}

TEST(Padding, RejectsBadParameters) {
  SignedGraph h(3, {0, 0, 0});
  std::vector<std::uint8_t> side(3, 0);
  EXPECT_THROW(pad_to_ug(h, 2, 4, side), InvalidArgument);
  EXPECT_THROW(pad_to_ug(h, 3, 3, side), InvalidArgument);
  EXPECT_THROW(pad_to_ug(h, 3, 0, side), InvalidArgument);
}

TEST(Gadget, MeanIsExactAndAllZeroCount) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Rng rng(seed);
    auto g = sample_gadget(3, 6, rng);
    auto r = measure_gadget(g, kDefaultGadgetBeta, rng);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.labelings, 531441u);
    EXPECT_EQ(r.total_satisfied, 12u * r.labelings);
    std::uint64_t zeros = 0;
    for (Label c : g.offsets) zeros += c == 0;
    std::vector<Label> z(6, 0);
    EXPECT_EQ(g.satisfied(z, z), zeros);
    EXPECT_LE(r.min_satisfied, zeros);
    EXPECT_GE(r.max_satisfied, zeros);
  }
}

TEST(Gadget, ExtremesMatchFullEnumeration) {
  Rng rng(8);
  auto g = sample_gadget(2, 4, rng);
  auto r = measure_gadget(g, 1.0, rng);
  std::uint64_t lo = UINT64_MAX, hi = 0, total = 0;
  for (std::uint32_t mask = 0; mask < 256; ++mask) {
    std::vector<Label> left(4), right(4);
    for (int i = 0; i < 4; ++i) {
      left[i] = (mask >> i) & 1;
      right[i] = (mask >> (i + 4)) & 1;
    }
    const auto s = g.satisfied(left, right);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
    total += s;
  }
  EXPECT_EQ(r.min_satisfied, lo);
  EXPECT_EQ(r.max_satisfied, hi);
  EXPECT_EQ(r.total_satisfied, total);
}

TEST(Gadget, ValidatedSpecAndRetry) {
  auto g = bipartite_gadget({3, 6, 1});
  EXPECT_TRUE(g.report.passed);
  EXPECT_GE(g.report.min_satisfied, std::ceil(g.report.band_lo));
  EXPECT_LE(g.report.max_satisfied, std::floor(g.report.band_hi));
  EXPECT_THROW(bipartite_gadget({3, 7, 1}), InvalidArgument);
  EXPECT_THROW(bipartite_gadget({3, 3, 1}), InvalidArgument);
  EXPECT_THROW(bipartite_gadget({3, 6, 1, 0.0}), InvalidArgument);
  EXPECT_THROW(bipartite_gadget({3, 6, 1, 0.05, 3}), GenerationFailure);
}

TEST(Blowup, StarValueIdentity) {
  Rng rng(9);
  for (int trial = 0; trial < 6; ++trial) {
    const std::uint32_t n = 3 + trial % 2;
    auto base = fixtures::random_lineq(n, 2, rng);
    std::vector<std::uint8_t> present(num_pairs(n), 1);
    present[rng.below(present.size())] = 0;
    DenseInstance g(base, present, 0.5);
    auto star = blow_up_star(g, {2, 0});
    EXPECT_EQ(star.n(), 2 * n);
    EXPECT_EQ(brute_force(star).violated, 4 * brute_force(g).violated);
  }
}

TEST(Blowup, SatisfiableBaseStaysSatisfiable) {
  Rng rng(10);
  auto p = planted(5, 3, 0, ConstraintKind::kCyclic, rng);
  auto d = sparsify_everywhere_dense(std::get<LinEqInstance>(p.instance), 0.3, rng);
  auto star = blow_up_star(d, {3, 1});
  std::vector<Label> x;
  for (Vertex v = 0; v < 5; ++v) x.insert(x.end(), 3, p.planted[v]);
  EXPECT_EQ(violated_count(star, Assignment(x)), 0u);
}

TEST(Blowup, GadgetBlocksFillNonEdges) {
  Rng rng(11);
  auto d = sparsify_everywhere_dense(LinEqInstance::zeros(4, 2), 0.34, rng);
  ASSERT_LT(d.num_edges(), 6u);
  auto full = blow_up(d, {4, 7});
  EXPECT_EQ(full.n(), 16u);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) {
      if (d.has_edge(u, v)) continue;
      auto gad = bipartite_gadget({2, 4, derive_seed(7, pair_index(4, u, v))});
      for (std::uint32_t i = 0; i < 4; ++i) {
        for (std::uint32_t j = 0; j < 4; ++j) {
          EXPECT_EQ(full.offset(u * 4 + i, v * 4 + j), gad.offset(i, j));
        }
      }
    }
  }
  EXPECT_THROW(blow_up(d, {3, 0}), InvalidArgument);
  EXPECT_THROW(blow_up(DenseInstance::complete(UgInstance::from_lineq(LinEqInstance::zeros(3, 2))),
                       {2, 0}),
               InvalidArgument);
}
