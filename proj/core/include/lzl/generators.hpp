#pragma once

#include <map>
#include <string>
#include <vector>

#include "lzl/graph.hpp"

namespace lzl {

// Every generator throws ValidationError on parameters that would give an
// empty graph and SizeError when the result exceeds `vertex_cap`.

Graph path_graph(std::size_t n, std::size_t vertex_cap = Caps::kWideVertices);
/// Requires n >= 3.
Graph cycle_graph(std::size_t n, std::size_t vertex_cap = Caps::kWideVertices);
Graph complete_graph(std::size_t n, std::size_t vertex_cap = Caps::kWideVertices);
/// K_{1,leaves}, centre is vertex 0.
Graph star_graph(std::size_t leaves, std::size_t vertex_cap = Caps::kWideVertices);

/// n x n grid. Vertex (row, col), both 1-based with row 1 at the bottom, has
/// id (row-1)*n + (col-1) and labels row=, col=.
Graph grid_graph(std::size_t n, std::size_t vertex_cap = Caps::kWideVertices);
Graph rect_grid(std::size_t rows, std::size_t cols, std::size_t vertex_cap = Caps::kWideVertices);

/// Complete k-ary tree of depth d: root 0, children in breadth-first order,
/// label depth=.
Graph kary_tree(std::size_t k, std::size_t d, std::size_t vertex_cap = Caps::kWideVertices);

/// Spider with the given arm lengths. Head is vertex 0, arms follow in order,
/// each listed outward from the head; label depth= is the distance to the head.
Graph spider_graph(const std::vector<std::size_t>& arms, std::size_t vertex_cap = Caps::kWideVertices);

/// Replaces every edge with a path through `i` new vertices. Base vertices keep
/// their ids; new vertices are appended edge by edge in sorted edge order.
/// A depth= label is rescaled by (i+1) and interpolated along each edge.
Graph subdivide(const Graph& base, std::size_t i, std::size_t vertex_cap = Caps::kWideVertices);

/// G box H. Pair (a, x) gets id a*|H| + x and labels left=a+1, right=x+1.
Graph cartesian_product(const Graph& g, const Graph& h, std::size_t vertex_cap = Caps::kWideVertices);

/// Tree decoded from a Pruefer sequence of length n-2 over [0, n).
Graph prufer_tree(std::size_t n, const std::vector<Vertex>& sequence, std::size_t vertex_cap = Caps::kWideVertices);

struct FamilyParams {
  std::map<std::string, long> values;  // n, k, d, i
  std::vector<std::size_t> arms;       // spider
  std::string base;                    // subdivide: base family, reads the same values
};

/// Dispatch by family name: path, cycle, complete, star, grid, kary, spider,
/// subdivide. Unknown names raise ValidationError.
Graph generate(const std::string& family, const FamilyParams& params, std::size_t vertex_cap = Caps::kWideVertices);

}  // namespace lzl
