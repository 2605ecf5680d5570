#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lzl/caps.hpp"
#include "lzl/vertex_set.hpp"

namespace lzl {

using Edge = std::pair<Vertex, Vertex>;
using Labels = std::map<std::string, std::string>;

struct GraphOptions {
  bool allow_disconnected = false;
  std::size_t vertex_cap = Caps::kDefaultVertices;
};

/// Immutable simple undirected graph. Adjacency rows never contain the
/// vertex itself; the robber's option to stay put is a game rule, not a loop.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
  const std::vector<Vertex>& neighbor_list(Vertex v) const { return neighbor_lists_.at(v); }
  VertexSet closed_neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbor_lists_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).contains(v); }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  const Labels& labels(Vertex v) const { return labels_.at(v); }
  std::optional<std::string> label(Vertex v, const std::string& key) const;
  /// Integer value of a label, if present and numeric.
  std::optional<long> int_label(Vertex v, const std::string& key) const;
  bool has_labels() const;

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all_vertices() const { return VertexSet::full(order()); }

  /// Closed-neighbourhood bitmasks, one per vertex. Requires order() <= 64.
  std::vector<std::uint64_t> closed_masks() const;
  /// Open-neighbourhood bitmasks, one per vertex. Requires order() <= 64.
  std::vector<std::uint64_t> open_masks() const;

  bool operator==(const Graph& other) const {
    return adjacency_ == other.adjacency_ && labels_ == other.labels_;
  }

 private:
  friend class GraphBuilder;

  std::vector<VertexSet> adjacency_;
  std::vector<std::vector<Vertex>> neighbor_lists_;
  std::vector<Labels> labels_;
  std::size_t edge_count_ = 0;
};

/// Accumulates edges and labels, then validates into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t order() const noexcept { return n_; }

  /// Throws ValidationError on self-loops, out-of-range endpoints and duplicates.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  GraphBuilder& set_label(Vertex v, const std::string& key, const std::string& value);

  /// Throws SizeError above the vertex cap and ValidationError for a
  /// disconnected result unless the options allow it.
  Graph build(const GraphOptions& options = {}) const;

 private:
  std::size_t n_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Labels> labels_;
  std::size_t edge_count_ = 0;
};

// ---- neighbourhood and boundary primitives ----

/// N[S]: S together with every neighbour of a vertex in S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
/// delta(S) = N[S] \ S.
VertexSet vertex_boundary(const Graph& g, const VertexSet& s);
/// Number of edges with exactly one endpoint in S.
std::size_t edge_boundary_count(const Graph& g, const VertexSet& s);

// ---- distances and structural predicates ----

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

/// Breadth-first hop distances from v; kUnreachable for other components.
std::vector<std::size_t> distances(const Graph& g, Vertex v);
std::size_t max_degree(const Graph& g);
std::size_t min_degree(const Graph& g);
/// Maximum pairwise distance. Throws PreconditionError on a disconnected graph.
std::size_t diameter(const Graph& g);
/// Max distance from v to any vertex.
std::size_t eccentricity(const Graph& g, Vertex v);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// True iff no two distinct vertices share two or more common neighbours.
bool is_c4_free(const Graph& g);

/// Connected components of G - v, each as a VertexSet, ordered by smallest member.
std::vector<VertexSet> components_after_removal(const Graph& g, Vertex v);
/// Connected components of the subgraph induced by `within`.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);

/// Subgraph induced by `keep`, with vertices renumbered in ascending order.
/// `original` receives the old index of every new vertex. Labels are copied.
Graph induced_subgraph(const Graph& g, const VertexSet& keep, std::vector<Vertex>* original = nullptr,
                       bool allow_disconnected = true);

/// Side length if the graph is a labelled n x n grid (labels row/col in [1,n]).
std::optional<std::size_t> as_square_grid(const Graph& g);

}  // namespace lzl
