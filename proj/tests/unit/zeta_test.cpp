#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lzl/errors.hpp"
#include "lzl/generators.hpp"
#include "lzl/policy.hpp"
#include "lzl/prox.hpp"
#include "lzl/zeta.hpp"
#include "oracles.hpp"

using namespace lzl;

namespace {

VertexSet one_based(std::size_t n, std::initializer_list<Vertex> vs) {
  VertexSet s(n);
  for (Vertex v : vs) s.insert(v - 1);
  return s;
}

}  // namespace

TEST(Observe, Examples) {
  const Graph p3 = path_graph(3);
  EXPECT_EQ(observation_string(observe(p3, 1, one_based(3, {1}))), "1");
  EXPECT_EQ(observation_string(observe(p3, 2, one_based(3, {1}))), "*");
  const Graph g = grid_graph(3);
  for (Vertex u = 0; u < 9; ++u) EXPECT_EQ(observe(g, u, VertexSet(9, {u})), std::vector<Outcome>{Outcome::zero});
}

TEST(Partition, Examples) {
  const Graph p3 = path_graph(3);
  EXPECT_EQ(partition_candidates(p3, p3.all_vertices(), one_based(3, {1})).size(), 3u);

  const Graph k4 = complete_graph(4);
  const auto k = partition_candidates(k4, k4.all_vertices(), one_based(4, {1}));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], one_based(4, {1}));
  EXPECT_EQ(k[1], one_based(4, {2, 3, 4}));

  const Graph p5 = path_graph(5);
  const auto p = partition_candidates(p5, p5.all_vertices(), one_based(5, {3}));
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], one_based(5, {1, 5}));
  EXPECT_EQ(p[1], one_based(5, {2, 4}));
  EXPECT_EQ(p[2], one_based(5, {3}));
}

TEST(Partition, ClassesCoverAndShareObservations) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_connected_graph(2 + trial % 12, 0.3, rng);
    std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << g.order()) - 1);
    const VertexSet m = VertexSet::from_mask(g.order(), mask(rng));
    const VertexSet u = VertexSet::from_mask(g.order(), mask(rng) & mask(rng));
    VertexSet seen(g.order());
    for (const VertexSet& cls : partition_candidates(g, m, u)) {
      ASSERT_FALSE(cls.empty());
      EXPECT_FALSE(cls.intersects(seen));
      seen |= cls;
      const auto obs = observe(g, *cls.first(), u);
      for (Vertex x : cls) EXPECT_EQ(observe(g, x, u), obs);
    }
    EXPECT_EQ(seen, m);
  }
}

TEST(ZetaWinnable, Examples) {
  EXPECT_TRUE(zeta_winnable(complete_graph(4), 3));
  EXPECT_FALSE(zeta_winnable(complete_graph(4), 2));
  EXPECT_TRUE(zeta_winnable(path_graph(2), 1));
  const Graph spider = spider_graph({3, 3, 3});
  EXPECT_FALSE(zeta_winnable(spider, 1));
  EXPECT_TRUE(zeta_winnable(spider, 2));
  EXPECT_THROW(zeta_winnable(path_graph(13), 1), SizeError);
}

TEST(ZetaNumber, Examples) {
  for (std::size_t n : {3u, 4u, 5u}) EXPECT_EQ(zeta_number(complete_graph(n)), n - 1);
  EXPECT_EQ(zeta_number(path_graph(3)), 1u);
  EXPECT_EQ(zeta_number(spider_graph({3, 3, 3})), 2u);
  EXPECT_EQ(zeta_number(path_graph(1)), 0u);
}

TEST(ZetaNumber, MatchesOracleOnSmallConnectedGraphs) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : oracle::connected_graphs(n)) EXPECT_EQ(zeta_number(g), oracle::zeta_number(g));
}

TEST(ZetaProperties, ProxSandwichAndTrivialUpperBound) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_connected_graph(2 + trial % 8, 0.15 + 0.1 * (trial % 5), rng);
    const std::size_t z = zeta_number(g);
    const std::size_t p = prox_number(g);
    EXPECT_LE(p, z);
    EXPECT_LE(z, max_degree(g) * p);
    EXPECT_LE(z, g.order() - 1);
    if (p >= max_degree(g) * max_degree(g)) EXPECT_EQ(z, p);
    if (z > 0) EXPECT_FALSE(zeta_winnable(g, z - 1));
    EXPECT_TRUE(zeta_winnable(g, z + 1));
  }
}

TEST(Simulate, AllButOneCapturesK4InRoundOne) {
  const Graph k4 = complete_graph(4);
  const auto policy = all_but_one_policy(k4);
  EXPECT_EQ(policy->budget(), 3u);
  const SimulationResult r = simulate_policy(k4, *policy);
  EXPECT_EQ(r.outcome, SimulationOutcome::captured);
  EXPECT_EQ(r.worst_round, 1u);
}

TEST(Simulate, ArmScanOnSpiderEscapes) {
  const Graph spider = spider_graph({3, 3, 3});
  const SimulationResult r = simulate_policy(spider, *arm_scan_policy(spider));
  EXPECT_EQ(r.outcome, SimulationOutcome::escape);
  EXPECT_FALSE(r.witness.empty());
}

// A single sweep v2, v3, v4 does not localize the robber on P5: after the first
// probe reads 1 the candidates are {v1, v3}, and the robber on v3 can step to v4
// or v2 so the later probes never isolate it. The branch tree records an escape.
TEST(Simulate, SingleSweepOnP5Escapes) {
  const Graph p5 = path_graph(5);
  const SimulationResult r = simulate_policy(p5, *sweep_policy(p5, {1, 2, 3}));
  EXPECT_EQ(r.outcome, SimulationOutcome::escape);
  EXPECT_FALSE(r.witness.empty());
  const auto first = partition_candidates(p5, p5.all_vertices(), one_based(5, {2}));
  EXPECT_NE(std::find(first.begin(), first.end(), one_based(5, {1, 3})), first.end());
}

TEST(Simulate, OverBudgetPolicyIsRejected) {
  const Graph p4 = path_graph(4);
  ProbeSchedule s;
  s.mode = GameMode::zeta;
  s.cops = 1;
  s.rounds = {one_based(4, {1, 2})};
  EXPECT_THROW(simulate_policy(p4, SchedulePolicy("bad", s)), PolicyError);
}

TEST(Simulate, CapturedPolicyCertifiesWinnable) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const Graph k = complete_graph(n);
    const auto policy = all_but_one_policy(k);
    ASSERT_EQ(simulate_policy(k, *policy).outcome, SimulationOutcome::captured);
    EXPECT_TRUE(zeta_winnable(k, policy->budget()));
  }
}
