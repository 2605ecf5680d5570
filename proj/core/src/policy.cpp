#include "lzl/policy.hpp"

#include <map>

#include "lzl/errors.hpp"

namespace lzl {

SchedulePolicy::SchedulePolicy(std::string name, ProbeSchedule schedule, bool cyclic)
    : name_(std::move(name)), schedule_(std::move(schedule)), cyclic_(cyclic) {
  if (cyclic_ && schedule_.rounds.empty()) throw PreconditionError("cyclic schedule policy needs at least one round");
}

VertexSet SchedulePolicy::probe(const PolicyState& state, const VertexSet& candidates) const {
  const auto t = static_cast<std::size_t>(state.at(0));
  if (t < schedule_.rounds.size()) return schedule_.rounds[t];
  return VertexSet(candidates.universe());
}

PolicyState SchedulePolicy::advance(const PolicyState& state, const VertexSet&, const VertexSet&,
                                    const std::vector<Outcome>&) const {
  auto t = static_cast<std::size_t>(state.at(0)) + 1;
  if (cyclic_) {
    t %= schedule_.rounds.size();
  } else if (t > schedule_.rounds.size()) {
    t = schedule_.rounds.size();
  }
  return {static_cast<std::int64_t>(t)};
}

std::unique_ptr<Policy> all_but_one_policy(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("all-but-one policy needs at least two vertices");
  ProbeSchedule s;
  s.mode = GameMode::zeta;
  s.cops = g.order() - 1;
  VertexSet probe = g.all_vertices();
  probe.erase(g.order() - 1);
  s.rounds.push_back(probe);
  return std::make_unique<SchedulePolicy>("all-but-one", std::move(s), true);
}

std::unique_ptr<Policy> arm_scan_policy(const Graph& spider) {
  if (spider.order() < 2) throw PreconditionError("arm scan needs a spider with at least one arm");
  ProbeSchedule s;
  s.mode = GameMode::zeta;
  s.cops = 1;
  // Arms are numbered outward from the head in the generator, so ascending
  // order walks each arm from the head to its tip.
  for (Vertex v = 1; v < spider.order(); ++v) s.rounds.push_back(VertexSet(spider.order(), {v}));
  return std::make_unique<SchedulePolicy>("arm-scan", std::move(s), true);
}

std::unique_ptr<Policy> sweep_policy(const Graph& g, const std::vector<Vertex>& order) {
  ProbeSchedule s;
  s.mode = GameMode::zeta;
  s.cops = 1;
  for (Vertex v : order) s.rounds.push_back(VertexSet(g.order(), {v}));
  return std::make_unique<SchedulePolicy>("sweep", std::move(s), false);
}

std::string to_string(SimulationOutcome o) {
  switch (o) {
    case SimulationOutcome::captured:
      return "captured";
    case SimulationOutcome::escape:
      return "escape";
    case SimulationOutcome::cap_exceeded:
      return "cap-exceeded";
  }
  return "unknown";
}

namespace {

struct Simulator {
  const Graph& g;
  const Policy& policy;
  std::size_t round_cap;

  enum class Mark { on_path, done };
  struct Info {
    Mark mark;
    std::size_t rounds;  // rounds to capture from here, once done
  };
  std::map<std::pair<PolicyState, VertexSet>, Info> memo;
  std::vector<EscapeStep> path;
  SimulationResult result;
  bool failed = false;

  // Worst-case number of further rounds until capture from this position.
  std::size_t visit(const PolicyState& state, const VertexSet& posterior, std::size_t depth) {
    auto key = std::make_pair(state, posterior);
    if (auto it = memo.find(key); it != memo.end()) {
      if (it->second.mark == Mark::done) return it->second.rounds;
      fail(SimulationOutcome::escape);
      return 0;
    }
    if (depth >= round_cap) {
      fail(SimulationOutcome::cap_exceeded);
      return 0;
    }
    memo.emplace(key, Info{Mark::on_path, 0});

    const VertexSet candidates = closed_neighborhood(g, posterior);
    const VertexSet probes = policy.probe(state, candidates);
    if (probes.universe() != g.order()) throw PolicyError(policy.name() + ": probe over the wrong universe");
    if (probes.count() > policy.budget()) {
      throw PolicyError(policy.name() + ": round " + std::to_string(depth + 1) + " probes " +
                        std::to_string(probes.count()) + " vertices, budget " + std::to_string(policy.budget()));
    }
    std::size_t worst = 1;
    for (const VertexSet& cls : partition_candidates(g, candidates, probes)) {
      if (cls.count() == 1) continue;
      const auto obs = observe(g, *cls.first(), probes);
      path.push_back({depth + 1, probes, observation_string(obs), cls});
      const PolicyState next = policy.advance(state, probes, cls, obs);
      const std::size_t sub = visit(next, cls, depth + 1);
      if (failed) return 0;
      path.pop_back();
      worst = std::max(worst, sub + 1);
    }
    memo[key] = Info{Mark::done, worst};
    return worst;
  }

  void fail(SimulationOutcome why) {
    failed = true;
    result.outcome = why;
    result.witness = path;
  }
};

}  // namespace

SimulationResult simulate_policy(const Graph& g, const Policy& policy, std::size_t round_cap) {
  Simulator sim{g, policy, round_cap, {}, {}, {}, false};
  const std::size_t rounds = sim.visit(policy.initial_state(), g.all_vertices(), 0);
  SimulationResult out = std::move(sim.result);
  out.positions = sim.memo.size();
  if (!sim.failed) {
    out.outcome = SimulationOutcome::captured;
    out.worst_round = rounds;
  }
  return out;
}

}  // namespace lzl
