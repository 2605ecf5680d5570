#include "lzl/lifting.hpp"

#include <algorithm>

#include "lzl/errors.hpp"
#include "lzl/prox.hpp"
#include "lzl/trees.hpp"

namespace lzl {

namespace {

void require_clearing(const Graph& g, const ProbeSchedule& s, const char* who) {
  if (s.mode != GameMode::prox) throw PreconditionError(std::string(who) + " needs a prox schedule");
  if (!run_schedule(g, s).cleared) throw PreconditionError(std::string(who) + ": schedule does not clear the graph");
}

// First vertex of the probe set whose outcome is 1, or -1.
std::int64_t first_one(const VertexSet& probes, const std::vector<Outcome>& obs, const VertexSet* among = nullptr) {
  std::size_t i = 0;
  for (Vertex v : probes) {
    if (obs[i++] == Outcome::one && (among == nullptr || among->contains(v))) return static_cast<std::int64_t>(v);
  }
  return -1;
}

// state = {t, flag}; flag >= 0 means the next round is an endgame round around it.
class FlagPolicy : public Policy {
 public:
  FlagPolicy(std::string name, const Graph& g, ProbeSchedule s, std::size_t budget)
      : name_(std::move(name)), g_(g), s_(std::move(s)), budget_(budget) {}

  std::string name() const override { return name_; }
  std::size_t budget() const override { return budget_; }
  PolicyState initial_state() const override { return {0, -1}; }

  VertexSet probe(const PolicyState& state, const VertexSet&) const override {
    if (state[1] >= 0) return endgame(static_cast<Vertex>(state[1]));
    const auto t = static_cast<std::size_t>(state[0]);
    return t < s_.length() ? s_.rounds[t] : g_.empty_set();
  }

  PolicyState advance(const PolicyState& state, const VertexSet& probes, const VertexSet&,
                      const std::vector<Outcome>& obs) const override {
    if (state[1] >= 0) return {state[0], -1};
    const auto t = std::min<std::int64_t>(state[0] + 1, static_cast<std::int64_t>(s_.length()));
    const VertexSet scheduled = state[0] < static_cast<std::int64_t>(s_.length()) ? s_.rounds[state[0]] : g_.empty_set();
    return {t, first_one(probes, obs, &scheduled)};
  }

 protected:
  virtual VertexSet endgame(Vertex v) const = 0;
  const Graph& graph() const { return g_; }

 private:
  std::string name_;
  Graph g_;
  ProbeSchedule s_;
  std::size_t budget_;
};

class TpbPolicy : public FlagPolicy {
 public:
  using FlagPolicy::FlagPolicy;

 protected:
  VertexSet endgame(Vertex v) const override {
    VertexSet out = closed_neighborhood(graph(), graph().closed_neighbors(v));
    out.erase(v);
    return out;
  }
};

class NeighbourEndgamePolicy : public FlagPolicy {
 public:
  using FlagPolicy::FlagPolicy;

 protected:
  VertexSet endgame(Vertex v) const override { return graph().neighbors(v); }
};

// state = {guard, t}. The robber is known to sit strictly below the guard.
// The remaining cops replay the schedule projected onto one child subtree of
// the guard at a time: probes inside the subtree stay, a probe on the guard
// becomes a probe on the child, everything else is dropped. Projection keeps
// the contamination dynamics clearing, so some probe other than the guard
// eventually reads 0 or 1, and a 1 pins the robber below a single child.
class TreeGuardPolicy : public Policy {
 public:
  TreeGuardPolicy(const Graph& tree, Vertex root, ProbeSchedule s)
      : tree_(tree), rooted_(root_tree(tree, root)), s_(std::move(s)), below_(tree.order()), forest_(tree.order()) {
    // below_[c] = subtree of c without c itself.
    for (auto& b : below_) b = VertexSet(tree.order());
    for (Vertex v = 0; v < tree.order(); ++v) {
      for (Vertex u = v; u != rooted_.root;) {
        u = rooted_.parent[u];
        below_[u].insert(v);
      }
    }
    for (Vertex g = 0; g < tree.order(); ++g) {
      for (Vertex c : rooted_.children[g]) {
        VertexSet sub = below_[c];
        sub.insert(c);
        for (const auto& round : s_.rounds) {
          VertexSet r = round & sub;
          if (round.contains(g)) r.insert(c);
          forest_[g].push_back(std::move(r));
        }
      }
    }
  }

  std::string name() const override { return "lift-tree"; }
  std::size_t budget() const override { return s_.cops + 1; }
  PolicyState initial_state() const override { return {static_cast<std::int64_t>(rooted_.root), 0}; }

  VertexSet probe(const PolicyState& state, const VertexSet&) const override {
    const auto guard = static_cast<Vertex>(state[0]);
    const auto& rounds = forest_[guard];
    VertexSet out = rounds.empty() ? tree_.empty_set() : rounds[static_cast<std::size_t>(state[1])];
    out.insert(guard);
    return out;
  }

  PolicyState advance(const PolicyState& state, const VertexSet&, const VertexSet& posterior,
                      const std::vector<Outcome>&) const override {
    const auto guard = static_cast<Vertex>(state[0]);
    for (Vertex c : rooted_.children[guard]) {
      if (posterior.is_subset_of(below_[c])) return {static_cast<std::int64_t>(c), 0};
    }
    const auto len = std::max<std::int64_t>(1, static_cast<std::int64_t>(forest_[guard].size()));
    return {state[0], (state[1] + 1) % len};
  }

 private:
  Graph tree_;
  RootedTree rooted_;
  ProbeSchedule s_;
  std::vector<VertexSet> below_;
  std::vector<std::vector<VertexSet>> forest_;
};

}  // namespace

std::unique_ptr<Policy> lift_delta(const Graph& g, const ProbeSchedule& prox_schedule) {
  require_clearing(g, prox_schedule, "lift-delta");
  const std::size_t delta = max_degree(g);
  ProbeSchedule s;
  s.mode = GameMode::zeta;
  s.cops = std::max<std::size_t>(1, delta) * prox_schedule.cops;
  for (const auto& round : prox_schedule.rounds) {
    VertexSet r(g.order());
    for (Vertex u : round) {
      r.insert(u);
      const auto& nb = g.neighbor_list(u);
      for (std::size_t i = 0; i + 1 < delta && i < nb.size(); ++i) r.insert(nb[i]);
    }
    s.rounds.push_back(std::move(r));
  }
  s.note("strategy", "lift-delta");
  return std::make_unique<SchedulePolicy>("lift-delta", std::move(s), false);
}

std::unique_ptr<Policy> lift_tpb(const Graph& g, const ProbeSchedule& prox_schedule) {
  require_clearing(g, prox_schedule, "lift-tpb");
  const std::size_t delta = max_degree(g);
  if (prox_schedule.cops < delta * delta) {
    throw PreconditionError("lift-tpb needs at least maxdeg^2 = " + std::to_string(delta * delta) + " cops");
  }
  return std::make_unique<TpbPolicy>("lift-tpb", g, prox_schedule, prox_schedule.cops);
}

std::unique_ptr<Policy> lift_tree(const Graph& tree, Vertex root, const ProbeSchedule& prox_schedule) {
  if (!is_tree(tree)) throw PreconditionError("lift-tree needs a tree");
  require_clearing(tree, prox_schedule, "lift-tree");
  return std::make_unique<TreeGuardPolicy>(tree, root, prox_schedule);
}

std::unique_ptr<Policy> grid_endgame_policy(const Graph& grid, const ProbeSchedule& prox_schedule) {
  if (!as_square_grid(grid)) throw PreconditionError("grid endgame needs a labelled square grid");
  if (prox_schedule.cops < 4) throw PreconditionError("grid endgame needs at least four cops");
  require_clearing(grid, prox_schedule, "grid endgame");
  return std::make_unique<NeighbourEndgamePolicy>("grid-endgame", grid, prox_schedule, prox_schedule.cops);
}

}  // namespace lzl
