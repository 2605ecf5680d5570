#include "lzl/generators.hpp"

#include <algorithm>

#include "lzl/errors.hpp"

namespace lzl {

namespace {

GraphOptions capped(std::size_t cap, bool allow_disconnected = false) {
  GraphOptions o;
  o.vertex_cap = cap;
  o.allow_disconnected = allow_disconnected;
  return o;
}

void require_order(std::size_t n, std::size_t cap) {
  if (n == 0) throw ValidationError("generator parameters give an empty graph");
  if (n > cap) throw SizeError("generated graph order", n, cap);
}

long need(const FamilyParams& p, const std::string& key) {
  auto it = p.values.find(key);
  if (it == p.values.end()) throw ValidationError("missing parameter '" + key + "'");
  if (it->second <= 0) throw ValidationError("parameter '" + key + "' must be positive");
  return it->second;
}

}  // namespace

Graph path_graph(std::size_t n, std::size_t vertex_cap) {
  require_order(n, vertex_cap);
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build(capped(vertex_cap));
}

Graph cycle_graph(std::size_t n, std::size_t vertex_cap) {
  if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
  require_order(n, vertex_cap);
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build(capped(vertex_cap));
}

Graph complete_graph(std::size_t n, std::size_t vertex_cap) {
  require_order(n, vertex_cap);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build(capped(vertex_cap));
}

Graph star_graph(std::size_t leaves, std::size_t vertex_cap) {
  if (leaves == 0) throw ValidationError("star needs at least one leaf");
  require_order(leaves + 1, vertex_cap);
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build(capped(vertex_cap));
}

Graph rect_grid(std::size_t rows, std::size_t cols, std::size_t vertex_cap) {
  if (rows == 0 || cols == 0) throw ValidationError("grid needs positive dimensions");
  require_order(rows * cols, vertex_cap);
  GraphBuilder b(rows * cols);
  auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) b.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) b.add_edge(id(r, c), id(r + 1, c));
      b.set_label(id(r, c), "row", std::to_string(r + 1));
      b.set_label(id(r, c), "col", std::to_string(c + 1));
    }
  }
  return b.build(capped(vertex_cap));
}

Graph grid_graph(std::size_t n, std::size_t vertex_cap) { return rect_grid(n, n, vertex_cap); }

Graph kary_tree(std::size_t k, std::size_t d, std::size_t vertex_cap) {
  if (k == 0) throw ValidationError("k-ary tree needs k >= 1");
  std::size_t n = 1;
  std::size_t level = 1;
  for (std::size_t i = 0; i < d; ++i) {
    level *= k;
    n += level;
    if (n > vertex_cap) throw SizeError("generated graph order", n, vertex_cap);
  }
  GraphBuilder b(n);
  b.set_label(0, "depth", "0");
  // Breadth-first numbering: children of v are k*v+1 .. k*v+k.
  std::vector<std::size_t> depth(n, 0);
  for (Vertex v = 1; v < n; ++v) {
    const Vertex parent = (v - 1) / k;
    depth[v] = depth[parent] + 1;
    b.add_edge(parent, v);
    b.set_label(v, "depth", std::to_string(depth[v]));
  }
  return b.build(capped(vertex_cap));
}

Graph spider_graph(const std::vector<std::size_t>& arms, std::size_t vertex_cap) {
  if (arms.empty()) throw ValidationError("spider needs at least one arm");
  std::size_t n = 1;
  for (std::size_t len : arms) {
    if (len == 0) throw ValidationError("spider arm lengths must be positive");
    n += len;
  }
  require_order(n, vertex_cap);
  GraphBuilder b(n);
  b.set_label(0, "depth", "0");
  Vertex next = 1;
  for (std::size_t len : arms) {
    Vertex prev = 0;
    for (std::size_t step = 1; step <= len; ++step, ++next) {
      b.add_edge(prev, next);
      b.set_label(next, "depth", std::to_string(step));
      prev = next;
    }
  }
  return b.build(capped(vertex_cap));
}

Graph subdivide(const Graph& base, std::size_t i, std::size_t vertex_cap) {
  const auto edges = base.edges();
  const std::size_t n = base.order() + edges.size() * i;
  require_order(n, vertex_cap);
  GraphBuilder b(n);
  auto depth_of = [&](Vertex v) { return base.int_label(v, "depth"); };
  for (Vertex v = 0; v < base.order(); ++v) {
    for (const auto& [key, value] : base.labels(v)) {
      if (key == "depth") {
        b.set_label(v, key, std::to_string(*depth_of(v) * static_cast<long>(i + 1)));
      } else {
        b.set_label(v, key, value);
      }
    }
  }
  Vertex next = base.order();
  for (const auto& [u, v] : edges) {
    const auto du = depth_of(u);
    const auto dv = depth_of(v);
    Vertex prev = u;
    for (std::size_t t = 1; t <= i; ++t, ++next) {
      b.add_edge(prev, next);
      if (du && dv) {
        const long scaled = *du * static_cast<long>(i + 1) + static_cast<long>(t) * (*dv - *du);
        b.set_label(next, "depth", std::to_string(scaled));
      }
      prev = next;
    }
    b.add_edge(prev, v);
  }
  return b.build(capped(vertex_cap, !is_connected(base)));
}

Graph cartesian_product(const Graph& g, const Graph& h, std::size_t vertex_cap) {
  const std::size_t n = g.order() * h.order();
  require_order(n, vertex_cap);
  GraphBuilder b(n);
  const std::size_t w = h.order();
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex x = 0; x < w; ++x) {
      const Vertex id = a * w + x;
      b.set_label(id, "left", std::to_string(a + 1));
      b.set_label(id, "right", std::to_string(x + 1));
      for (Vertex y : h.neighbor_list(x)) {
        if (x < y) b.add_edge(id, a * w + y);
      }
      for (Vertex c : g.neighbor_list(a)) {
        if (a < c) b.add_edge(id, c * w + x);
      }
    }
  }
  return b.build(capped(vertex_cap, !is_connected(g) || !is_connected(h)));
}

Graph prufer_tree(std::size_t n, const std::vector<Vertex>& sequence, std::size_t vertex_cap) {
  require_order(n, vertex_cap);
  if (n == 1) {
    if (!sequence.empty()) throw ValidationError("Pruefer sequence for one vertex must be empty");
    return GraphBuilder(1).build(capped(vertex_cap));
  }
  if (sequence.size() != n - 2) throw ValidationError("Pruefer sequence must have length n-2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw ValidationError("Pruefer entry out of range");
    ++degree[v];
  }
  GraphBuilder b(n);
  for (Vertex v : sequence) {
    const Vertex leaf = static_cast<Vertex>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    b.add_edge(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  b.add_edge(last.at(0), last.at(1));
  return b.build(capped(vertex_cap));
}

Graph generate(const std::string& family, const FamilyParams& params, std::size_t vertex_cap) {
  auto n = [&] { return static_cast<std::size_t>(need(params, "n")); };
  if (family == "path") return path_graph(n(), vertex_cap);
  if (family == "cycle") return cycle_graph(n(), vertex_cap);
  if (family == "complete") return complete_graph(n(), vertex_cap);
  if (family == "star") return star_graph(n(), vertex_cap);
  if (family == "grid") return grid_graph(n(), vertex_cap);
  if (family == "kary") {
    return kary_tree(static_cast<std::size_t>(need(params, "k")), static_cast<std::size_t>(need(params, "d")),
                     vertex_cap);
  }
  if (family == "spider") return spider_graph(params.arms, vertex_cap);
  if (family == "subdivide") {
    if (params.base.empty() || params.base == "subdivide") throw ValidationError("subdivide needs a base family");
    auto it = params.values.find("i");
    if (it == params.values.end() || it->second < 0) throw ValidationError("subdivide needs i >= 0");
    // The base is built wide; only the final graph is held to the cap.
    const Graph base = generate(params.base, params, Caps::kMaxVertices);
    return subdivide(base, static_cast<std::size_t>(it->second), vertex_cap);
  }
  throw ValidationError("unknown graph family '" + family + "'");
}

}  // namespace lzl
