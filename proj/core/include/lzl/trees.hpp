#pragma once

#include <memory>
#include <vector>

#include "lzl/graph.hpp"
#include "lzl/policy.hpp"
#include "lzl/schedule.hpp"

namespace lzl {

/// Vertex whose removal leaves components of order <= n/2; smallest such index.
/// Throws PreconditionError if g is not a tree.
Vertex midway_vertex(const Graph& tree);

/// Rooted view of a tree: parent pointers and children in ascending order.
struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;  // parent[root] == root
  std::vector<std::vector<Vertex>> children;
  std::vector<std::size_t> depth;
  std::size_t height = 0;
};
RootedTree root_tree(const Graph& tree, Vertex root);

/// Distance layers L_1..L_d from the root, plus per-layer non-leaf counts
/// (vertices of degree >= 2).
struct LevelDecomposition {
  Vertex root = 0;
  std::vector<std::vector<Vertex>> levels;  // levels[i-1] = L_i
  std::vector<std::size_t> nonleaf;         // nonleaf[i-1] = |{w in L_i : deg w >= 2}|
  std::size_t max_nonleaf() const;
  /// ceil(max non-leaf count / 3) + 1.
  std::size_t cop_bound() const { return (max_nonleaf() + 2) / 3 + 1; }
};
LevelDecomposition level_decomposition(const Graph& tree, Vertex root);

/// Smallest depth over all rootings (the radius), with the smallest root achieving it.
struct TreeDepth {
  std::size_t depth = 0;
  Vertex root = 0;
};
TreeDepth tree_depth(const Graph& tree);

/// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(std::size_t n);

/// Recursive midway-vertex policy: the midway vertex of the current subtree is
/// probed every round and the rest of the budget searches the first component
/// that still holds candidates. Budget ceil(log2 n).
std::unique_ptr<Policy> strat_tree_log(const Graph& tree);

/// Leaf-path sweep: for each root-to-leaf path in depth-first leaf order, one
/// round on {u_0, u_4, ...} and one on {u_2, u_6, ...}. Budget floor(d/4)+1.
/// The pair of rounds per path is repeated when a single pass does not verify.
ProbeSchedule strat_tree_depth(const Graph& tree, Vertex root);

/// Level-by-level guard schedule with ceil(max non-leaf/3)+1 cops. Each cop
/// owns three phase slots (round t mod 3) and probes the vertex parked in the
/// slot of the current phase; guards move up one level at a time.
ProbeSchedule strat_tree_levels(const Graph& tree, Vertex root);

}  // namespace lzl
