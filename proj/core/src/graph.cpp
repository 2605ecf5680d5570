#include "lzl/graph.hpp"

#include <algorithm>
#include <deque>

#include "lzl/errors.hpp"

namespace lzl {

// ---- Graph ----

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = adjacency_.at(v);
  s.insert(v);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbor_lists_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<std::string> Graph::label(Vertex v, const std::string& key) const {
  const auto& l = labels_.at(v);
  if (auto it = l.find(key); it != l.end()) return it->second;
  return std::nullopt;
}

std::optional<long> Graph::int_label(Vertex v, const std::string& key) const {
  auto text = label(v, key);
  if (!text) return std::nullopt;
  try {
    std::size_t pos = 0;
    const long value = std::stol(*text, &pos);
    if (pos != text->size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool Graph::has_labels() const {
  return std::any_of(labels_.begin(), labels_.end(), [](const Labels& l) { return !l.empty(); });
}

std::vector<std::uint64_t> Graph::closed_masks() const {
  std::vector<std::uint64_t> out = open_masks();
  for (Vertex v = 0; v < out.size(); ++v) out[v] |= std::uint64_t{1} << v;
  return out;
}

std::vector<std::uint64_t> Graph::open_masks() const {
  if (order() > 64) throw PreconditionError("bitmask view needs at most 64 vertices");
  std::vector<std::uint64_t> out(order());
  for (Vertex v = 0; v < order(); ++v) out[v] = adjacency_[v].mask();
  return out;
}

// ---- GraphBuilder ----

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), adjacency_(n), labels_(n) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) {
    throw ValidationError("edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ") out of range 1.." +
                          std::to_string(n_));
  }
  if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u + 1));
  if (has_edge(u, v)) {
    throw ValidationError("duplicate edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")");
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
  return *this;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& row = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const Vertex other = &row == &adjacency_[u] ? v : u;
  return std::find(row.begin(), row.end(), other) != row.end();
}

GraphBuilder& GraphBuilder::set_label(Vertex v, const std::string& key, const std::string& value) {
  if (v >= n_) throw ValidationError("label for vertex " + std::to_string(v + 1) + " out of range");
  labels_[v][key] = value;
  return *this;
}

Graph GraphBuilder::build(const GraphOptions& options) const {
  if (n_ > options.vertex_cap) throw SizeError("graph order", n_, options.vertex_cap);
  Graph g;
  g.adjacency_.assign(n_, VertexSet(n_));
  g.neighbor_lists_ = adjacency_;
  g.labels_ = labels_;
  g.edge_count_ = edge_count_;
  for (Vertex u = 0; u < n_; ++u) {
    auto& list = g.neighbor_lists_[u];
    std::sort(list.begin(), list.end());
    for (Vertex v : list) g.adjacency_[u].insert(v);
  }
  if (!options.allow_disconnected && n_ > 0 && !is_connected(g)) {
    throw ValidationError("graph is disconnected (allow-disconnected not set)");
  }
  return g;
}

// ---- primitives ----

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  for (Vertex v : s) {
    for (Vertex u : g.neighbor_list(v)) out.insert(u);
  }
  return out;
}

VertexSet vertex_boundary(const Graph& g, const VertexSet& s) { return closed_neighborhood(g, s) - s; }

std::size_t edge_boundary_count(const Graph& g, const VertexSet& s) {
  std::size_t count = 0;
  for (Vertex v : s) {
    for (Vertex u : g.neighbor_list(v)) {
      if (!s.contains(u)) ++count;
    }
  }
  return count;
}

std::vector<std::size_t> distances(const Graph& g, Vertex v) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  if (v >= g.order()) throw PreconditionError("distances: vertex out of range");
  std::deque<Vertex> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbor_list(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::size_t eccentricity(const Graph& g, Vertex v) {
  std::size_t best = 0;
  for (std::size_t d : distances(g, v)) {
    if (d == kUnreachable) throw PreconditionError("eccentricity: graph is disconnected");
    best = std::max(best, d);
  }
  return best;
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreachable; });
}

bool is_tree(const Graph& g) { return g.order() > 0 && g.size() + 1 == g.order() && is_connected(g); }

bool is_c4_free(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if ((g.neighbors(u) & g.neighbors(v)).count() >= 2) return false;
    }
  }
  return true;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (Vertex start : within) {
    if (seen.contains(start)) continue;
    VertexSet comp(g.order());
    std::deque<Vertex> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      comp.insert(u);
      for (Vertex w : g.neighbor_list(u)) {
        if (within.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          queue.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components_after_removal(const Graph& g, Vertex v) {
  VertexSet rest = g.all_vertices();
  rest.erase(v);
  return components_within(g, rest);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep, std::vector<Vertex>* original,
                       bool allow_disconnected) {
  std::vector<Vertex> old_of_new = keep.to_vector();
  std::vector<Vertex> new_of_old(g.order(), kUnreachable);
  for (Vertex i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = i;
  GraphBuilder b(old_of_new.size());
  for (Vertex i = 0; i < old_of_new.size(); ++i) {
    const Vertex u = old_of_new[i];
    for (Vertex w : g.neighbor_list(u)) {
      if (u < w && keep.contains(w)) b.add_edge(i, new_of_old[w]);
    }
    for (const auto& [key, value] : g.labels(u)) b.set_label(i, key, value);
  }
  if (original != nullptr) *original = old_of_new;
  GraphOptions options;
  options.allow_disconnected = allow_disconnected;
  options.vertex_cap = std::max(g.order(), Caps::kDefaultVertices);
  return b.build(options);
}

std::optional<std::size_t> as_square_grid(const Graph& g) {
  const std::size_t n2 = g.order();
  std::size_t n = 0;
  while ((n + 1) * (n + 1) <= n2) ++n;
  if (n == 0 || n * n != n2) return std::nullopt;
  std::vector<Vertex> at(n2, kUnreachable);
  for (Vertex v = 0; v < n2; ++v) {
    const auto r = g.int_label(v, "row");
    const auto c = g.int_label(v, "col");
    if (!r || !c || *r < 1 || *c < 1 || static_cast<std::size_t>(*r) > n || static_cast<std::size_t>(*c) > n) {
      return std::nullopt;
    }
    const std::size_t slot = static_cast<std::size_t>(*r - 1) * n + static_cast<std::size_t>(*c - 1);
    if (at[slot] != kUnreachable) return std::nullopt;
    at[slot] = v;
  }
  std::size_t expected_edges = 2 * n * (n - 1);
  if (g.size() != expected_edges) return std::nullopt;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c + 1 < n && !g.adjacent(at[r * n + c], at[r * n + c + 1])) return std::nullopt;
      if (r + 1 < n && !g.adjacent(at[r * n + c], at[(r + 1) * n + c])) return std::nullopt;
    }
  }
  return n;
}

}  // namespace lzl
