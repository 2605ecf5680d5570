#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lzl/caps.hpp"
#include "lzl/graph.hpp"
#include "lzl/policy.hpp"

namespace lzl {

struct PathDecomposition {
  std::vector<VertexSet> bags;
  /// Largest bag size minus one (0 for an empty decomposition).
  std::size_t width() const;
};

struct DecompositionViolation {
  int property = 0;  // 1 = coverage, 2 = edge containment, 3 = interpolation
  std::string detail;
};

/// Checks coverage, edge containment, and B_i & B_j <= B_k for i <= k <= j.
std::vector<DecompositionViolation> validate_path_decomposition(const Graph& g, const std::vector<VertexSet>& bags);

/// Drops bags contained in a neighbouring bag and removes from each B_i the
/// vertices of B_i \ B_{i+1} that have no neighbour inside B_i, repeating until
/// stable. Throws ValidationError if the input is not a valid decomposition.
PathDecomposition normalize_path_decomposition(const Graph& g, const std::vector<VertexSet>& bags);

/// Minimum-width decomposition via a vertex-separation DP over vertex
/// orderings. Requires order <= caps.pathwidth.
PathDecomposition brute_pathwidth(const Graph& g, const Caps& caps = {});

/// Sweep policy: round i probes B_i minus one designated neighbour v_i of a
/// vertex u_i leaving after B_i. Budget = width. Requires a normalized
/// decomposition of a graph with at least two vertices.
std::unique_ptr<Policy> strat_pathwidth(const Graph& g, const PathDecomposition& decomposition);

}  // namespace lzl
