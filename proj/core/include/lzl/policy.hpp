#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lzl/graph.hpp"
#include "lzl/schedule.hpp"
#include "lzl/zeta.hpp"

namespace lzl {

/// Opaque, comparable policy memory. Policies keep everything they need to
/// replay a decision here, so (state, candidates) identifies a game position.
using PolicyState = std::vector<std::int64_t>;

/// Deterministic adaptive cop strategy for the one-visibility game.
///
/// Each round the simulator passes the current candidate set M (positions the
/// robber may occupy right before the probe). After the probe it reports the
/// class of M the robber's observation falls in.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::string name() const = 0;
  virtual std::size_t budget() const = 0;
  virtual PolicyState initial_state() const { return {}; }
  virtual VertexSet probe(const PolicyState& state, const VertexSet& candidates) const = 0;
  virtual PolicyState advance(const PolicyState& state, const VertexSet& probes, const VertexSet& posterior,
                              const std::vector<Outcome>& observation) const = 0;
};

/// Replays a fixed schedule. After the last round it probes nothing, or wraps
/// around when cyclic.
class SchedulePolicy : public Policy {
 public:
  SchedulePolicy(std::string name, ProbeSchedule schedule, bool cyclic = false);
  std::string name() const override { return name_; }
  std::size_t budget() const override { return schedule_.cops; }
  PolicyState initial_state() const override { return {0}; }
  VertexSet probe(const PolicyState& state, const VertexSet& candidates) const override;
  PolicyState advance(const PolicyState& state, const VertexSet& probes, const VertexSet& posterior,
                      const std::vector<Outcome>& observation) const override;
  const ProbeSchedule& schedule() const { return schedule_; }

 private:
  std::string name_;
  ProbeSchedule schedule_;
  bool cyclic_;
};

/// Probes every vertex except the last one, every round.
std::unique_ptr<Policy> all_but_one_policy(const Graph& g);

/// Single cop walking each arm of a spider outward from the head, arm after
/// arm, forever.
std::unique_ptr<Policy> arm_scan_policy(const Graph& spider);

/// Single cop probing the given vertices once each, in order.
std::unique_ptr<Policy> sweep_policy(const Graph& g, const std::vector<Vertex>& order);

enum class SimulationOutcome { captured, escape, cap_exceeded };
std::string to_string(SimulationOutcome o);

struct EscapeStep {
  std::size_t round = 0;
  VertexSet probes;
  std::string observation;
  VertexSet posterior;
};

struct SimulationResult {
  SimulationOutcome outcome = SimulationOutcome::captured;
  /// Worst-case capture round over all robber branches (when captured).
  std::size_t worst_round = 0;
  /// Branch path ending in a repeated position (escape) or at the round cap.
  std::vector<EscapeStep> witness;
  std::size_t positions = 0;
};

/// Explores every robber branch against an omniscient robber. A class that is a
/// singleton counts as capture. A branch returning to a position already on the
/// current path proves an escape. Throws PolicyError on over-budget probes.
SimulationResult simulate_policy(const Graph& g, const Policy& policy, std::size_t round_cap = 1000);

}  // namespace lzl
