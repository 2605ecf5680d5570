#include <gtest/gtest.h>

#include "lzl/bounds.hpp"
#include "lzl/domination.hpp"
#include "lzl/generators.hpp"
#include "lzl/graph_io.hpp"
#include "lzl/iso.hpp"
#include "lzl/pathwidth.hpp"
#include "lzl/prox.hpp"
#include "lzl/zeta.hpp"
#include "oracles.hpp"

using namespace lzl;

namespace {

bool has_rule(const BoundsReport& r, Target t, BoundKind k, std::size_t value, const std::string& prefix) {
  for (const Bound& b : r.bounds) {
    if (b.target == t && b.kind == k && b.value == value && b.rule.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

Quantities exact_quantities(const Graph& g) {
  Quantities q;
  q.prox = prox_number(g);
  q.zeta = zeta_number(g);
  const auto [v, e] = iso_profiles(g);
  q.hv = h_index(v);
  q.he = h_index(e);
  q.peak_v = iso_peak(v);
  q.peak_e = iso_peak(e);
  q.pathwidth = brute_pathwidth(g).width();
  q.domination = min_dominating_set(g).count();
  return q;
}

}  // namespace

TEST(Bounds, CompleteGraphPathwidth) {
  Quantities q;
  q.pathwidth = 3;
  const BoundsReport r = assemble_bounds(complete_graph(4), q, "k4");
  EXPECT_TRUE(has_rule(r, Target::zeta, BoundKind::upper, 3, "zeta<=pathwidth"));
  EXPECT_EQ(r.interval(Target::zeta).upper, 3u);
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Bounds, Grid11Window) {
  const BoundsReport r = assemble_bounds(grid_graph(11), {}, "grid11");
  ASSERT_TRUE(r.grid_side.has_value());
  EXPECT_EQ(*r.grid_side, 11u);
  ASSERT_TRUE(r.grid_window.has_value());
  EXPECT_EQ(r.grid_window->lower, 4u);
  EXPECT_EQ(r.grid_window->upper, 7u);
  const Interval prox = r.interval(Target::prox);
  // Certified lower bound is floor(11/5)+1; the window's 4 is reported separately.
  EXPECT_EQ(prox.lower, 3u);
  EXPECT_EQ(prox.upper, 6u);
  EXPECT_TRUE(has_rule(r, Target::prox, BoundKind::upper, 6, "grid sweep"));
  EXPECT_TRUE(has_rule(r, Target::prox, BoundKind::lower, 3, "grid profile"));
}

TEST(Bounds, KaryTreeFormulas) {
  const Graph t = kary_tree(2, 8, Caps::kMaxVertices);
  const auto kd = detect_kary(t);
  ASSERT_TRUE(kd.has_value());
  EXPECT_EQ(kd->first, 2u);
  EXPECT_EQ(kd->second, 8u);
  const BoundsReport r = assemble_bounds(t, {}, "t2_8");
  EXPECT_TRUE(has_rule(r, Target::prox, BoundKind::lower, 1, "k-ary isoperimetric"));
  EXPECT_TRUE(has_rule(r, Target::prox, BoundKind::upper, 3, "tree depth"));
  EXPECT_TRUE(has_rule(r, Target::zeta, BoundKind::upper, 4, "tree depth"));
  EXPECT_FALSE(r.symbolic.empty());
  EXPECT_FALSE(detect_kary(spider_graph({3, 3, 3})).has_value());
  EXPECT_FALSE(detect_kary(grid_graph(3)).has_value());
}

TEST(Bounds, PropagatesThroughProxAtMostZeta) {
  Quantities q;
  q.prox = 2;
  const BoundsReport r = assemble_bounds(spider_graph({3, 3, 3}), q);
  EXPECT_GE(r.interval(Target::zeta).lower, 2u);
  EXPECT_TRUE(has_rule(r, Target::zeta, BoundKind::upper, 3, "tree: zeta<=prox+1"));
}

TEST(Bounds, ReportsContradictions) {
  Quantities q;
  q.prox = 3;
  q.zeta = 1;
  const BoundsReport r = assemble_bounds(path_graph(4), q);
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST(Bounds, ExactValuesLieInsideEveryInterval) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      const Quantities q = exact_quantities(g);
      const BoundsReport r = assemble_bounds(g, q);
      EXPECT_TRUE(r.diagnostics.empty()) << serialize_graph(g) << r.diagnostics.front();
      for (const Bound& b : r.bounds) {
        const std::size_t truth = b.target == Target::prox ? *q.prox : *q.zeta;
        if (b.kind == BoundKind::lower) EXPECT_LE(b.value, truth) << b.rule;
        else EXPECT_GE(b.value, truth) << b.rule;
      }
    }
  }
}

TEST(Bounds, SmallGridsStayConsistentWithExactValues) {
  for (std::size_t n : {2u, 3u, 4u}) {
    const Graph g = grid_graph(n);
    Quantities q;
    q.prox = prox_number(g);
    const BoundsReport r = assemble_bounds(g, q);
    EXPECT_TRUE(r.diagnostics.empty()) << n;
    EXPECT_LE(r.interval(Target::prox).lower, *q.prox);
  }
  // The window claim overshoots on the 3x3 grid.
  EXPECT_EQ(prox_number(grid_graph(3)), 1u);
  EXPECT_EQ(assemble_bounds(grid_graph(3), {}).grid_window->lower, 2u);
}
