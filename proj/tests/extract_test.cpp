#include <gtest/gtest.h>

#include "support.hpp"

namespace kdense {
namespace {

std::vector<std::pair<NodeId, NodeId>> with_clique(std::vector<std::pair<NodeId, NodeId>> edges, NodeId from,
                                                   NodeId to) {
  for (NodeId u = from; u < to; ++u)
    for (NodeId v = u + 1; v < to; ++v) edges.emplace_back(u, v);
  return edges;
}

TEST(RankSort, Examples) {
  RankVector r(3);
  r.r = {5, 1, 3};
  EXPECT_EQ(rank_sort(r), (std::vector<NodeId>{0, 2, 1}));
  RankVector flat(5);
  EXPECT_EQ(rank_sort(flat), (std::vector<NodeId>{0, 1, 2, 3, 4}));
  RankVector ties(4);
  ties.r = {1, 2, 2, 1};
  EXPECT_EQ(rank_sort(ties), (std::vector<NodeId>{1, 2, 0, 3}));
}

TEST(BestPrefixExact, Triangle) {
  Graph g = testing::triangle();
  std::vector<NodeId> order{0, 1, 2};
  DensityReport rep = best_prefix_exact(g, order, 3);
  EXPECT_EQ(rep.nodes.size(), 3u);
  EXPECT_EQ(rep.exact, (Density{1, 3}));
  EXPECT_EQ(rep.exact.to_fixed2(), "0.33");
  EXPECT_FALSE(rep.empty);
}

TEST(BestPrefixExact, NoCliqueIsFlagged) {
  Graph g = testing::make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  std::vector<NodeId> order{0, 1, 2, 3};
  DensityReport rep = best_prefix_exact(g, order, 3);
  EXPECT_TRUE(rep.empty);
  EXPECT_TRUE(rep.nodes.empty());
  EXPECT_EQ(rep.density(), 0.0);
}

TEST(BestPrefixExact, RejectsNonPermutation) {
  Graph g = testing::triangle();
  std::vector<NodeId> order{0, 1};
  EXPECT_THROW(best_prefix_exact(g, order, 3), DomainError);
}

TEST(BestPrefixExact, TiesGoToLargerPrefix) {
  // Two disjoint triangles: prefixes of size 3 and 6 both have density 1/3.
  Graph g = testing::make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  std::vector<NodeId> order{0, 1, 2, 3, 4, 5};
  DensityReport rep = best_prefix_exact(g, order, 3);
  EXPECT_EQ(rep.nodes.size(), 6u);
  EXPECT_EQ(rep.exact, (Density{2, 6}));
}

TEST(BestPrefixExact, IncrementalCountsMatchRecount) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen::gnp(14, 0.5, seed);
    auto ord = degeneracy_order(g);
    std::vector<NodeId> order(g.n());
    std::iota(order.begin(), order.end(), NodeId{0});
    Rng rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k = 2; k <= 5; ++k) {
      ExactExtractor ex(g, ord, k);
      auto counts = ex.prefix_counts(order);
      auto all = oracle::brute_cliques(g, k);
      for (std::size_t i = 0; i < g.n(); ++i) {
        std::set<NodeId> prefix(order.begin(), order.begin() + i + 1);
        std::uint64_t expect = 0;
        for (const auto& c : all)
          expect += std::all_of(c.begin(), c.end(), [&](NodeId u) { return prefix.count(u) > 0; });
        ASSERT_EQ(counts[i], expect) << "seed " << seed << " k " << k << " prefix " << i + 1;
      }
    }
  }
}

TEST(BestPrefixExact, DominatesEveryPrefix) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen::gnp(14, 0.45, seed);
    auto ord = degeneracy_order(g);
    std::vector<NodeId> order(g.n());
    std::iota(order.begin(), order.end(), NodeId{0});
    Rng rng(100 + seed);
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t k = 3;
    ExactExtractor ex(g, ord, k);
    DensityReport rep = ex.best_prefix(order);
    auto counts = ex.prefix_counts(order);
    for (std::size_t i = 0; i < g.n(); ++i) EXPECT_GE(compare(rep.exact, Density{counts[i], i + 1}), 0);
    EXPECT_EQ(rep.exact.count, ex.count_in(rep.nodes));
    EXPECT_EQ(rep.exact.size, rep.nodes.size());
  }
}

TEST(BestPrefixExact, ScalingRanksKeepsChoice) {
  Graph g = gen::gnp(30, 0.4, 6);
  auto ord = degeneracy_order(g);
  SctForest f = build_sct(g, ord, 4);
  RankVector r = psctl_run(f, g.n(), 4, 3);
  RankVector scaled = r;
  for (auto& x : scaled.r) x *= 7;
  ExactExtractor ex(g, ord, 4);
  EXPECT_EQ(rank_sort(r), rank_sort(scaled));
  EXPECT_EQ(ex.best_prefix(rank_sort(r)).nodes, ex.best_prefix(rank_sort(scaled)).nodes);
}

TEST(BestPrefixExact, PlateauOnlyNeverBeatsFullSweep) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen::gnp(40, 0.3, seed);
    auto ord = degeneracy_order(g);
    SctForest f = build_sct(g, ord, 3);
    RankVector r = psctl_run(f, g.n(), 3, 2, {seed});
    ExactExtractor ex(g, ord, 3);
    auto order = rank_sort(r);
    auto full = ex.best_prefix(order);
    auto coarse = ex.best_prefix(order, &r);
    EXPECT_LE(compare(coarse.exact, full.exact), 0);
  }
}

TEST(BestPrefixExact, KnownTotalDoesNotChangeAnswer) {
  Graph g = gen::gnp(25, 0.4, 1);
  auto ord = degeneracy_order(g);
  const std::uint64_t total = oracle::brute_cliques(g, 4).size();
  std::vector<NodeId> order(g.n());
  std::iota(order.begin(), order.end(), NodeId{0});
  ExactExtractor a(g, ord, 4), b(g, ord, 4, total);
  EXPECT_EQ(a.total(), total);
  EXPECT_EQ(a.best_prefix(order).nodes, b.best_prefix(order).nodes);
}

TEST(BestPrefixSampled, ConstructedSevenCliques) {
  SampleSet s;
  s.k = 3;
  s.t = 7;
  s.hits = 7;
  s.paths_total = 7;
  const std::vector<std::vector<NodeId>> cl{{0, 1, 9}, {0, 2, 9}, {0, 3, 9}, {1, 2, 9},
                                             {3, 4, 9}, {5, 6, 9}, {7, 8, 9}};
  for (const auto& c : cl) {
    s.flat.insert(s.flat.end(), c.begin(), c.end());
    s.multiplicity.push_back(1);
  }
  std::vector<NodeId> order(20);
  std::iota(order.begin(), order.end(), NodeId{0});
  DensityReport rep = best_prefix_sampled(order, s);
  EXPECT_EQ(rep.nodes.size(), 10u);
  EXPECT_EQ(rep.sampled, (Density{7, 10}));
  EXPECT_EQ(rep.mode, DensityMode::Estimated);
  ASSERT_TRUE(rep.estimated);
  EXPECT_NEAR(static_cast<double>(*rep.estimated), 0.7, 1e-12);
}

TEST(BestPrefixSampled, EmptySampleIsFlagged) {
  SampleSet s;
  s.k = 3;
  std::vector<NodeId> order{0, 1, 2};
  DensityReport rep = best_prefix_sampled(order, s);
  EXPECT_TRUE(rep.empty);
  EXPECT_TRUE(rep.nodes.empty());
}

TEST(Extraction, TwoPlantedCliquesPicksTheLarger) {
  const std::size_t n = 120;
  Graph base = gen::gnp(n, 0.03, 31);
  auto edges = with_clique(with_clique(base.edges(), 0, 20), 40, 50);
  Graph g = Graph::from_edges(n, edges);
  const std::size_t k = 4;
  auto ord = degeneracy_order(g);

  SctForest f = build_sct(g, ord, k);
  ExactExtractor ex(g, ord, k);
  DensityReport rep = ex.best_prefix(rank_sort(psctl_run(f, n, k, 10)));
  std::set<NodeId> chosen(rep.nodes.begin(), rep.nodes.end());
  for (NodeId u = 0; u < 20; ++u) EXPECT_TRUE(chosen.count(u)) << u;

  SpathResult sp = spath_run(g, greedy_color(g, ord), k, 200000, 10, {5});
  DensityReport srep = best_prefix_sampled(rank_sort(sp.ranks), sp.samples);
  std::set<NodeId> schosen(srep.nodes.begin(), srep.nodes.end());
  for (NodeId u = 0; u < 20; ++u) EXPECT_TRUE(schosen.count(u)) << u;
}

TEST(Converged, ExactExtractorChooser) {
  // K4 on 0..3 and a triangle on 4..6.
  Graph g = Graph::from_edges(7, with_clique(with_clique({}, 0, 4), 4, 7));
  auto ord = degeneracy_order(g);
  ExactExtractor ex(g, ord, 3);
  RankVector k4_first(7), tri_first(7);
  k4_first.r = {2, 2, 2, 2, 1, 1, 1};
  tri_first.r = {1, 1, 1, 1, 2, 2, 2};
  EXPECT_TRUE(converged(ex, k4_first, k4_first));
  EXPECT_EQ(ex.best_prefix(rank_sort(k4_first)).exact, (Density{4, 4}));
  EXPECT_EQ(ex.best_prefix(rank_sort(tri_first)).exact, (Density{5, 7}));
  EXPECT_FALSE(converged(ex, k4_first, tri_first));
}

TEST(RunUntilStable, StopsOnRepeatAndRespectsCap) {
  Graph g = gen::gnp(14, 0.5, 21);
  auto ord = degeneracy_order(g);
  SctForest f = build_sct(g, ord, 3);
  ExactExtractor ex(g, ord, 3);

  Psctl once(f, g.n(), 3, {4});
  const auto used = run_until_stable(once, ex, 1000, 1);
  ASSERT_GE(used, 2u);
  Psctl replay(f, g.n(), 3, {4});
  for (std::uint32_t i = 0; i + 1 < used; ++i) replay.pass();
  RankVector before = replay.ranks();
  replay.pass();
  EXPECT_TRUE(converged(ex, before, replay.ranks()));

  Psctl capped(f, g.n(), 3, {4});
  EXPECT_EQ(run_until_stable(capped, ex, 3, 1000), 3u);

  Psctl patient(f, g.n(), 3, {4});
  EXPECT_GE(run_until_stable(patient, ex, 1000, 10), used + 9);
}

}  // namespace
}  // namespace kdense
