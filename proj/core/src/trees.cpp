#include "lzl/trees.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "lzl/errors.hpp"
#include "lzl/prox.hpp"

namespace lzl {

namespace {

void require_tree(const Graph& g, const char* who) {
  if (!is_tree(g)) throw PreconditionError(std::string(who) + ": input is not a tree");
}

// Midway vertex of the subtree induced by `part` (which must be connected).
Vertex midway_within(const Graph& g, const VertexSet& part) {
  const std::size_t n = part.count();
  for (Vertex v : part) {
    VertexSet rest = part;
    rest.erase(v);
    std::size_t worst = 0;
    for (const auto& comp : components_within(g, rest)) worst = std::max(worst, comp.count());
    if (2 * worst <= n) return v;
  }
  throw PreconditionError("midway vertex: part is not a tree");
}

}  // namespace

Vertex midway_vertex(const Graph& tree) {
  require_tree(tree, "midway_vertex");
  return midway_within(tree, tree.all_vertices());
}

RootedTree root_tree(const Graph& tree, Vertex root) {
  require_tree(tree, "root_tree");
  if (root >= tree.order()) throw PreconditionError("root out of range");
  RootedTree rt;
  rt.root = root;
  rt.parent.assign(tree.order(), root);
  rt.children.assign(tree.order(), {});
  rt.depth.assign(tree.order(), 0);
  std::vector<char> seen(tree.order(), 0);
  std::deque<Vertex> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : tree.neighbor_list(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      rt.parent[w] = u;
      rt.depth[w] = rt.depth[u] + 1;
      rt.height = std::max(rt.height, rt.depth[w]);
      rt.children[u].push_back(w);
      queue.push_back(w);
    }
  }
  return rt;
}

std::size_t LevelDecomposition::max_nonleaf() const {
  std::size_t best = 0;
  for (std::size_t c : nonleaf) best = std::max(best, c);
  return best;
}

LevelDecomposition level_decomposition(const Graph& tree, Vertex root) {
  const RootedTree rt = root_tree(tree, root);
  LevelDecomposition ld;
  ld.root = root;
  ld.levels.assign(rt.height, {});
  ld.nonleaf.assign(rt.height, 0);
  for (Vertex v = 0; v < tree.order(); ++v) {
    if (v == root) continue;
    ld.levels[rt.depth[v] - 1].push_back(v);
    if (tree.degree(v) >= 2) ++ld.nonleaf[rt.depth[v] - 1];
  }
  return ld;
}

TreeDepth tree_depth(const Graph& tree) {
  require_tree(tree, "tree_depth");
  TreeDepth best{kUnreachable, 0};
  for (Vertex v = 0; v < tree.order(); ++v) {
    const std::size_t e = eccentricity(tree, v);
    if (e < best.depth) best = {e, v};
  }
  return best;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

// ---- recursive midway policy ----

namespace {

class TreeLogPolicy : public Policy {
 public:
  explicit TreeLogPolicy(const Graph& tree) : tree_(tree), budget_(std::max<std::size_t>(1, ceil_log2(tree.order()))) {}

  std::string name() const override { return "tree-log"; }
  std::size_t budget() const override { return budget_; }

  VertexSet probe(const PolicyState&, const VertexSet& candidates) const override {
    VertexSet out(tree_.order());
    search(tree_.all_vertices(), candidates, out);
    return out;
  }

  PolicyState advance(const PolicyState& state, const VertexSet&, const VertexSet&,
                      const std::vector<Outcome>&) const override {
    return state;
  }

 private:
  void search(const VertexSet& part, const VertexSet& candidates, VertexSet& out) const {
    const std::size_t size = part.count();
    if (size == 0) return;
    if (size <= 2) {
      out.insert(*part.first());
      return;
    }
    const Vertex x = midway_within(tree_, part);
    out.insert(x);
    VertexSet rest = part;
    rest.erase(x);
    for (const auto& comp : components_within(tree_, rest)) {
      if (comp.intersects(candidates)) {
        search(comp, candidates, out);
        return;
      }
    }
  }

  Graph tree_;
  std::size_t budget_;
};

}  // namespace

std::unique_ptr<Policy> strat_tree_log(const Graph& tree) {
  require_tree(tree, "tree-log");
  if (tree.order() < 2) throw PreconditionError("tree-log needs at least two vertices");
  return std::make_unique<TreeLogPolicy>(tree);
}

// ---- depth strategy ----

ProbeSchedule strat_tree_depth(const Graph& tree, Vertex root) {
  const RootedTree rt = root_tree(tree, root);
  const std::size_t n = tree.order();
  ProbeSchedule base;
  base.mode = GameMode::prox;
  base.cops = rt.height / 4 + 1;
  if (n == 1) {
    base.rounds.push_back(VertexSet(1, {0}));
    return base;
  }

  // Leaves in depth-first order (children ascending), each with its root path.
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> path;
  std::vector<std::pair<Vertex, std::size_t>> dfs{{root, 0}};
  while (!dfs.empty()) {
    auto& [v, next_child] = dfs.back();
    if (next_child == 0) path.push_back(v);
    if (rt.children[v].empty()) {
      paths.push_back(path);
    }
    if (next_child < rt.children[v].size()) {
      const Vertex c = rt.children[v][next_child++];
      dfs.emplace_back(c, 0);
    } else {
      path.pop_back();
      dfs.pop_back();
    }
  }

  std::vector<std::pair<VertexSet, VertexSet>> pairs;
  for (const auto& p : paths) {
    const std::size_t q = p.size() - 1;
    VertexSet even(n);
    VertexSet odd(n);
    for (std::size_t j = 0; 4 * j <= q; ++j) even.insert(p[4 * j]);
    for (std::size_t j = 0; 4 * j + 2 <= q; ++j) odd.insert(p[4 * j + 2]);
    pairs.emplace_back(even, odd);
  }

  for (std::size_t repeat = 1; repeat <= 4; ++repeat) {
    ProbeSchedule s = base;
    for (const auto& [even, odd] : pairs) {
      for (std::size_t r = 0; r < repeat; ++r) {
        s.rounds.push_back(even);
        s.rounds.push_back(odd);
      }
    }
    s.note("strategy", "tree-depth");
    s.note("root", std::to_string(root + 1));
    s.note("depth", std::to_string(rt.height));
    s.note("leaf-paths", std::to_string(paths.size()));
    s.note("repeat", std::to_string(repeat));
    if (run_schedule(tree, s).cleared) return s;
  }
  throw VerificationError("tree-depth schedule failed contamination verification");
}

// ---- level strategy ----

ProbeSchedule strat_tree_levels(const Graph& tree, Vertex root) {
  const RootedTree rt = root_tree(tree, root);
  const LevelDecomposition ld = level_decomposition(tree, root);
  const std::size_t n = tree.order();
  const std::size_t groups = (ld.max_nonleaf() + 2) / 3;
  const std::size_t cops = groups + 1;

  ProbeSchedule s;
  s.mode = GameMode::prox;
  s.cops = cops;
  s.note("strategy", "tree-levels");
  s.note("root", std::to_string(root + 1));
  s.note("max-nonleaf", std::to_string(ld.max_nonleaf()));
  s.note("slot-scheme", "each cop owns three phase slots; a parked vertex is probed every third round");
  if (n == 1) {
    s.rounds.push_back(VertexSet(1, {0}));
    return s;
  }

  // Work list: non-leaf vertices from the deepest level up, then the root.
  // Within a level, vertices that have guarded children come first so their
  // children's slots are released before slots run short.
  std::vector<std::vector<Vertex>> work;
  for (std::size_t i = ld.levels.size(); i >= 1; --i) {
    std::vector<Vertex> with_children;
    std::vector<Vertex> without;
    for (Vertex v : ld.levels[i - 1]) {
      if (tree.degree(v) < 2) continue;
      bool has_guarded_child = false;
      for (Vertex c : rt.children[v]) has_guarded_child = has_guarded_child || tree.degree(c) >= 2;
      (has_guarded_child ? with_children : without).push_back(v);
    }
    with_children.insert(with_children.end(), without.begin(), without.end());
    if (!with_children.empty()) work.push_back(std::move(with_children));
  }
  work.push_back({root});

  constexpr std::size_t kNoVertex = static_cast<std::size_t>(-1);
  std::vector<std::size_t> slot_of(n, kNoVertex);
  std::vector<Vertex> occupant(3 * cops, kNoVertex);

  std::size_t t = 0;
  std::string order_note;
  for (const auto& level : work) {
    std::size_t next = 0;
    while (next < level.size()) {
      const std::size_t phase = t % 3;
      std::vector<Vertex> fresh;
      for (std::size_t c = 0; c < cops && next < level.size(); ++c) {
        const std::size_t slot = 3 * c + phase;
        if (occupant[slot] != kNoVertex) continue;
        const Vertex v = level[next++];
        occupant[slot] = v;
        slot_of[v] = slot;
        fresh.push_back(v);
      }
      VertexSet round(n);
      for (std::size_t c = 0; c < cops; ++c) {
        if (occupant[3 * c + phase] != kNoVertex) round.insert(occupant[3 * c + phase]);
      }
      s.rounds.push_back(round);
      ++t;
      // A parked vertex's first probe clears its whole subtree, so its
      // children can stop guarding.
      for (Vertex v : fresh) {
        for (Vertex c : rt.children[v]) {
          if (slot_of[c] != kNoVertex) {
            occupant[slot_of[c]] = kNoVertex;
            slot_of[c] = kNoVertex;
          }
        }
        if (!order_note.empty()) order_note += ',';
        order_note += std::to_string(v + 1);
      }
    }
  }
  s.note("parking-order", order_note);
  if (!run_schedule(tree, s).cleared) {
    throw VerificationError("tree-levels schedule failed contamination verification");
  }
  return s;
}

}  // namespace lzl
