#pragma once

#include <optional>
#include <vector>

#include "lzl/caps.hpp"
#include "lzl/graph.hpp"
#include "lzl/schedule.hpp"

namespace lzl {

/// One round of the contamination dynamics: (S u delta(S)) \ N[U].
VertexSet contamination_step(const Graph& g, const VertexSet& s, const VertexSet& probes);

/// Result of replaying a schedule under the contamination dynamics.
///
/// Round 1 probes act on the initial state directly, so S_1 = V \ N[V_1].
struct ScheduleTrace {
  std::vector<VertexSet> states;  // states[0] is the initial state, states[t] after round t
  bool cleared = false;
  std::optional<std::size_t> cleared_round;
  /// First round in which a vertex that was clean after the previous round is contaminated again.
  std::optional<std::size_t> first_recontamination;
  std::size_t max_contamination = 0;  // over states after round 1 onward
  std::vector<std::size_t> contaminated_counts;  // per round, after the probe

  std::size_t rounds_run() const noexcept { return contaminated_counts.size(); }
  const VertexSet& final_state() const { return states.back(); }
};

/// Replays a prox schedule from S = V. Stops at the first empty state.
/// Throws ValidationError on over-budget rounds or a non-prox schedule.
ScheduleTrace run_schedule(const Graph& g, const ProbeSchedule& schedule);
/// Same, from an arbitrary initial contaminated set.
ScheduleTrace run_schedule_from(const Graph& g, const ProbeSchedule& schedule, const VertexSet& initial);

struct ProxSolveResult {
  bool winnable = false;
  std::optional<ProbeSchedule> witness;  // shortest clearing schedule when winnable
  std::size_t states_expanded = 0;
};

/// Exact search over contaminated sets: is the empty set reachable from V with
/// at most p probes per round? Requires order <= caps.prox.
ProxSolveResult prox_winnable(const Graph& g, std::size_t p, const Caps& caps = {});

struct ProxNumberResult {
  std::size_t value = 0;
  std::optional<ProbeSchedule> witness;
};

/// Minimum p with prox_winnable true; 0 on the one-vertex graph.
ProxNumberResult prox_solve(const Graph& g, const Caps& caps = {});
std::size_t prox_number(const Graph& g, const Caps& caps = {});

}  // namespace lzl
