#pragma once

#include <memory>

#include "lzl/graph.hpp"
#include "lzl/policy.hpp"
#include "lzl/schedule.hpp"

namespace lzl {

// Each lift takes a prox schedule, checks that it clears under the
// contamination dynamics (PreconditionError otherwise), and turns it into a
// one-visibility policy.

/// Every probed u is joined by its first Delta-1 neighbours. Static, budget
/// Delta * cops.
std::unique_ptr<Policy> lift_delta(const Graph& g, const ProbeSchedule& prox_schedule);

/// Replays the schedule; the round after a probe reads 1 at v, probes every
/// vertex at distance 1 or 2 from v instead. Requires cops >= Delta^2; the
/// budget is the schedule's cops.
std::unique_ptr<Policy> lift_tpb(const Graph& g, const ProbeSchedule& prox_schedule);

/// Trees: one extra cop guards a vertex g, starting at the root, while the rest
/// replay the schedule projected onto each child subtree of g in turn. When
/// every candidate lies strictly below a child c of g, the guard moves to c and
/// the replay restarts. Budget cops+1.
std::unique_ptr<Policy> lift_tree(const Graph& tree, Vertex root, const ProbeSchedule& prox_schedule);

/// Grid endgame: replays the schedule until a probe reads 1 at u, then probes
/// N(u) for one round. Budget is the schedule's cops; needs at least 4.
std::unique_ptr<Policy> grid_endgame_policy(const Graph& grid, const ProbeSchedule& prox_schedule);

}  // namespace lzl
