#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lzl/domination.hpp"
#include "lzl/errors.hpp"
#include "lzl/generators.hpp"
#include "lzl/graph_io.hpp"
#include "lzl/lifting.hpp"
#include "lzl/pathwidth.hpp"
#include "lzl/policy.hpp"
#include "lzl/prox.hpp"
#include "lzl/separator.hpp"
#include "lzl/zeta.hpp"
#include "oracles.hpp"

using namespace lzl;

namespace {

VertexSet one_based(std::size_t n, std::initializer_list<Vertex> vs) {
  VertexSet s(n);
  for (Vertex v : vs) s.insert(v - 1);
  return s;
}

ProbeSchedule prox_schedule(std::size_t cops, std::vector<VertexSet> rounds) {
  ProbeSchedule s;
  s.mode = GameMode::prox;
  s.cops = cops;
  s.rounds = std::move(rounds);
  return s;
}

ProbeSchedule path_sweep(std::size_t n) {
  std::vector<VertexSet> rounds;
  for (Vertex v = 1; v + 1 < n; ++v) rounds.push_back(VertexSet(n, {v}));
  return prox_schedule(1, rounds);
}

}  // namespace

TEST(PathDecomposition, Validation) {
  const Graph k4 = complete_graph(4);
  EXPECT_TRUE(validate_path_decomposition(k4, {k4.all_vertices()}).empty());
  EXPECT_EQ(PathDecomposition{{k4.all_vertices()}}.width(), 3u);

  const Graph p4 = path_graph(4);
  const std::vector<VertexSet> bags{one_based(4, {1, 2}), one_based(4, {2, 3}), one_based(4, {3, 4})};
  EXPECT_TRUE(validate_path_decomposition(p4, bags).empty());
  EXPECT_EQ(PathDecomposition{bags}.width(), 1u);

  const std::vector<VertexSet> broken{one_based(4, {1, 2}), one_based(4, {3, 4}), one_based(4, {2, 3})};
  const auto v = validate_path_decomposition(p4, broken);
  ASSERT_FALSE(v.empty());
  bool saw_three = false;
  for (const auto& x : v) saw_three = saw_three || x.property == 3;
  EXPECT_TRUE(saw_three);

  const auto missing = validate_path_decomposition(p4, {one_based(4, {1, 2}), one_based(4, {2, 3})});
  ASSERT_FALSE(missing.empty());
  EXPECT_EQ(missing.front().property, 1);
}

TEST(PathDecomposition, NormalizeKeepsValidity) {
  const Graph p4 = path_graph(4);
  const std::vector<VertexSet> bags{one_based(4, {1}), one_based(4, {1, 2}), one_based(4, {1, 2, 3}),
                                    one_based(4, {3, 4}), one_based(4, {4})};
  const PathDecomposition d = normalize_path_decomposition(p4, bags);
  EXPECT_TRUE(validate_path_decomposition(p4, d.bags).empty());
  EXPECT_LE(d.width(), 2u);
  EXPECT_THROW(normalize_path_decomposition(p4, {one_based(4, {1, 2})}), ValidationError);
}

TEST(PathDecomposition, BruteWidthMatchesOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_connected_graph(2 + trial % 7, 0.35, rng);
    const PathDecomposition d = brute_pathwidth(g);
    EXPECT_TRUE(validate_path_decomposition(g, d.bags).empty());
    EXPECT_EQ(d.width(), oracle::pathwidth(g));
  }
  EXPECT_EQ(brute_pathwidth(grid_graph(3)).width(), 3u);
  EXPECT_THROW(brute_pathwidth(path_graph(11)), SizeError);
}

TEST(PathwidthPolicy, Examples) {
  const Graph k4 = complete_graph(4);
  const auto kp = strat_pathwidth(k4, normalize_path_decomposition(k4, {k4.all_vertices()}));
  EXPECT_EQ(kp->budget(), 3u);
  const SimulationResult kr = simulate_policy(k4, *kp);
  EXPECT_EQ(kr.outcome, SimulationOutcome::captured);
  EXPECT_EQ(kr.worst_round, 1u);

  const Graph p6 = path_graph(6);
  const auto pp = strat_pathwidth(p6, normalize_path_decomposition(p6, brute_pathwidth(p6).bags));
  EXPECT_EQ(pp->budget(), 1u);
  EXPECT_EQ(simulate_policy(p6, *pp).outcome, SimulationOutcome::captured);

  const Graph g3 = grid_graph(3);
  const auto gp = strat_pathwidth(g3, normalize_path_decomposition(g3, brute_pathwidth(g3).bags));
  EXPECT_EQ(gp->budget(), 3u);
  EXPECT_EQ(simulate_policy(g3, *gp).outcome, SimulationOutcome::captured);
}

TEST(PathwidthPolicy, CertifiesZetaAtMostPathwidth) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_connected_graph(2 + trial % 8, 0.3, rng);
    const PathDecomposition d = normalize_path_decomposition(g, brute_pathwidth(g).bags);
    const auto policy = strat_pathwidth(g, d);
    EXPECT_EQ(simulate_policy(g, *policy).outcome, SimulationOutcome::captured);
    EXPECT_LE(zeta_number(g), d.width());
  }
}

TEST(Domination, MinimumSets) {
  EXPECT_EQ(min_dominating_set(star_graph(5)), one_based(6, {1}));
  EXPECT_EQ(min_dominating_set(path_graph(4)).count(), 2u);
  EXPECT_EQ(min_dominating_set(cycle_graph(6)).count(), 2u);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected_graph(2 + trial % 10, 0.25, rng);
    const VertexSet d = min_dominating_set(g);
    EXPECT_TRUE(is_dominating(g, d));
    EXPECT_EQ(d.count(), oracle::domination_number(g));
  }
}

TEST(Domination, PolicyExamples) {
  const Graph star = star_graph(5);
  const auto sp = strat_domination(star, min_dominating_set(star));
  EXPECT_EQ(sp->budget(), 6u);
  const SimulationResult sr = simulate_policy(star, *sp);
  EXPECT_EQ(sr.outcome, SimulationOutcome::captured);
  EXPECT_LE(sr.worst_round, 2u);

  for (const Graph& g : {path_graph(4), cycle_graph(6)}) {
    const auto p = strat_domination(g, min_dominating_set(g));
    EXPECT_EQ(p->budget(), 4u);
    EXPECT_EQ(simulate_policy(g, *p).outcome, SimulationOutcome::captured);
  }
}

TEST(Domination, Preconditions) {
  EXPECT_THROW(strat_domination(grid_graph(3), min_dominating_set(grid_graph(3))), PreconditionError);
  EXPECT_THROW(strat_domination(path_graph(4), one_based(4, {1})), PreconditionError);
}

TEST(Domination, CapturesOnC4FreeGraphs) {
  std::mt19937_64 rng(64);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 40; ++trial) {
    const Graph g = oracle::random_connected_graph(3 + trial % 8, 0.2, rng);
    if (!is_c4_free(g)) continue;
    ++tested;
    const auto p = strat_domination(g, min_dominating_set(g));
    EXPECT_EQ(simulate_policy(g, *p).outcome, SimulationOutcome::captured);
  }
  EXPECT_GE(tested, 20);
}

TEST(Separator, ValidationRejectsBadSplits) {
  const Graph p9 = path_graph(9);
  const Separation good{one_based(9, {1, 2, 3, 4}), one_based(9, {6, 7, 8, 9}), one_based(9, {5})};
  EXPECT_NO_THROW(validate_separation(p9, p9.all_vertices(), good));
  const Separation edge{one_based(9, {1, 2, 3, 4, 5}), one_based(9, {6, 7, 8, 9}), VertexSet(9)};
  EXPECT_THROW(validate_separation(p9, p9.all_vertices(), edge), ValidationError);
  const Separation lopsided{one_based(9, {1, 2, 3, 4, 5, 6, 7}), one_based(9, {9}), one_based(9, {8})};
  EXPECT_THROW(validate_separation(p9, p9.all_vertices(), lopsided), ValidationError);
}

TEST(Separator, PathAndStar) {
  const Graph p9 = path_graph(9);
  const Separation s = balanced_separator_brute(p9, p9.all_vertices());
  EXPECT_EQ(s.c.count(), 1u);
  const SeparatorSchedule ps = strat_separator(p9);
  EXPECT_TRUE(run_schedule(p9, ps.schedule).cleared);

  const Graph star = star_graph(8);
  const Separation ss = balanced_separator_brute(star, star.all_vertices());
  EXPECT_EQ(ss.c, VertexSet(9, {0}));
  const SeparatorSchedule sched = strat_separator(star);
  EXPECT_TRUE(run_schedule(star, sched.schedule).cleared);
}

TEST(Separator, Grid4Clears) {
  const Graph g = grid_graph(4);
  const SeparatorSchedule s = strat_separator(g);
  EXPECT_TRUE(run_schedule(g, s.schedule).cleared);
  EXPECT_LE(static_cast<double>(s.schedule.cops), s.budget_bound);
}

TEST(Separator, RejectsBrokenOracle) {
  const Graph p9 = path_graph(9);
  const SeparatorOracle bad = [](const Graph&, const VertexSet& part) {
    return Separation{part, VertexSet(part.universe()), VertexSet(part.universe())};
  };
  EXPECT_THROW(strat_separator(p9, bad), ValidationError);
}

TEST(Lifting, DeltaLiftExamples) {
  const Graph k4 = complete_graph(4);
  const auto kp = lift_delta(k4, prox_schedule(1, {one_based(4, {1})}));
  EXPECT_EQ(kp->budget(), 3u);
  EXPECT_EQ(simulate_policy(k4, *kp).outcome, SimulationOutcome::captured);
  EXPECT_EQ(zeta_number(k4), 3u);

  const Graph p6 = path_graph(6);
  const auto pp = lift_delta(p6, path_sweep(6));
  EXPECT_EQ(pp->budget(), 2u);
  EXPECT_EQ(simulate_policy(p6, *pp).outcome, SimulationOutcome::captured);

  EXPECT_THROW(lift_delta(p6, prox_schedule(1, {one_based(6, {2})})), PreconditionError);
}

TEST(Lifting, DeltaLiftCapturesFromSolverWitnesses) {
  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected_graph(2 + trial % 8, 0.3, rng);
    const ProxNumberResult r = prox_solve(g);
    if (!r.witness) continue;
    const auto policy = lift_delta(g, *r.witness);
    EXPECT_LE(policy->budget(), max_degree(g) * r.value);
    EXPECT_EQ(simulate_policy(g, *policy).outcome, SimulationOutcome::captured);
  }
}

TEST(Lifting, TpbNeedsSquareOfDegree) {
  const Graph p6 = path_graph(6);
  EXPECT_THROW(lift_tpb(p6, path_sweep(6)), PreconditionError);
  ProbeSchedule wide = path_sweep(6);
  wide.cops = 4;
  const auto policy = lift_tpb(p6, wide);
  EXPECT_EQ(policy->budget(), 4u);
  EXPECT_EQ(simulate_policy(p6, *policy).outcome, SimulationOutcome::captured);
}

TEST(Lifting, TreeLiftCapturesOnSmallTrees) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph t = oracle::random_tree(2 + trial % 8, rng);
    const ProxNumberResult r = prox_solve(t);
    ASSERT_TRUE(r.witness.has_value());
    const auto policy = lift_tree(t, 0, *r.witness);
    EXPECT_EQ(policy->budget(), r.value + 1);
    EXPECT_EQ(simulate_policy(t, *policy).outcome, SimulationOutcome::captured) << serialize_graph(t);
  }
}

TEST(Lifting, GridEndgameNeedsFourCops) {
  const Graph g = grid_graph(3);
  const ProxNumberResult r = prox_solve(g);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_THROW(grid_endgame_policy(g, *r.witness), PreconditionError);
  ProbeSchedule four = *r.witness;
  four.cops = 4;
  EXPECT_EQ(grid_endgame_policy(g, four)->budget(), 4u);
}
