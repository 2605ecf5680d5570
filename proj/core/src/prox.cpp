#include "lzl/prox.hpp"

#include <bit>
#include <cstdint>
#include <deque>

#include "lzl/errors.hpp"

namespace lzl {

VertexSet contamination_step(const Graph& g, const VertexSet& s, const VertexSet& probes) {
  return closed_neighborhood(g, s) - closed_neighborhood(g, probes);
}

ScheduleTrace run_schedule_from(const Graph& g, const ProbeSchedule& schedule, const VertexSet& initial) {
  if (schedule.mode != GameMode::prox) throw ValidationError("run_schedule expects a prox-mode schedule");
  schedule.validate(g);
  if (initial.universe() != g.order()) throw PreconditionError("initial state has the wrong universe");

  ScheduleTrace trace;
  trace.states.push_back(initial);
  if (initial.empty()) {
    trace.cleared = true;
    trace.cleared_round = 0;
    return trace;
  }
  VertexSet state = initial;
  for (std::size_t t = 0; t < schedule.rounds.size(); ++t) {
    VertexSet spread = closed_neighborhood(g, state);
    VertexSet next = spread - closed_neighborhood(g, schedule.rounds[t]);
    if (!trace.first_recontamination && t > 0 && !(next - state).empty()) trace.first_recontamination = t + 1;
    state = std::move(next);
    const std::size_t count = state.count();
    trace.contaminated_counts.push_back(count);
    trace.max_contamination = std::max(trace.max_contamination, count);
    trace.states.push_back(state);
    if (count == 0) {
      trace.cleared = true;
      trace.cleared_round = t + 1;
      break;
    }
  }
  return trace;
}

ScheduleTrace run_schedule(const Graph& g, const ProbeSchedule& schedule) {
  return run_schedule_from(g, schedule, g.all_vertices());
}

namespace {

using Mask = std::uint32_t;

}  // namespace

ProxSolveResult prox_winnable(const Graph& g, std::size_t p, const Caps& caps) {
  const std::size_t n = g.order();
  if (n > caps.prox) throw SizeError("prox solver order", n, caps.prox);
  if (n > 30) throw SizeError("prox solver order", n, 30);
  ProxSolveResult result;
  if (p == 0) return result;

  std::vector<Mask> closed(n);
  {
    const auto cm = g.closed_masks();
    for (std::size_t v = 0; v < n; ++v) closed[v] = static_cast<Mask>(cm[v]);
  }
  auto spread = [&](Mask s) {
    Mask out = s;
    for (Mask rest = s; rest != 0; rest &= rest - 1) out |= closed[std::countr_zero(rest)];
    return out;
  };

  const Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::int32_t> parent(states, -1);
  std::vector<Mask> probe_of(states, 0);
  std::vector<char> seen(states, 0);
  std::deque<Mask> queue{full};
  seen[full] = 1;

  std::optional<Mask> goal_parent;
  Mask goal_probe = 0;
  while (!queue.empty() && !goal_parent) {
    const Mask s = queue.front();
    queue.pop_front();
    ++result.states_expanded;
    const Mask t = spread(s);
    // Probe candidates: vertices whose closed neighbourhood meets T, minus
    // those whose effect is contained in another candidate's.
    std::vector<Mask> effect;
    std::vector<std::size_t> vertex;
    {
      std::vector<Mask> cand_effect(n);
      for (std::size_t v = 0; v < n; ++v) cand_effect[v] = closed[v] & t;
      for (std::size_t v = 0; v < n; ++v) {
        if (cand_effect[v] == 0) continue;
        bool dominated = false;
        for (std::size_t w = 0; w < n && !dominated; ++w) {
          if (w == v || (cand_effect[v] & ~cand_effect[w]) != 0) continue;
          dominated = cand_effect[v] != cand_effect[w] || w < v;
        }
        if (!dominated) {
          effect.push_back(cand_effect[v]);
          vertex.push_back(v);
        }
      }
    }
    const std::size_t c = effect.size();
    const std::size_t r = std::min(p, c);
    if (r == 0) continue;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      Mask cleared = 0;
      Mask probe = 0;
      for (std::size_t i : idx) {
        cleared |= effect[i];
        probe |= Mask{1} << vertex[i];
      }
      const Mask next = t & ~cleared;
      if (next == 0) {
        goal_parent = s;
        goal_probe = probe;
        break;
      }
      if (!seen[next]) {
        seen[next] = 1;
        parent[next] = static_cast<std::int32_t>(s);
        probe_of[next] = probe;
        queue.push_back(next);
      }
      // next combination
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == c - r + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  if (!goal_parent) return result;

  std::vector<Mask> probes{goal_probe};
  for (Mask s = *goal_parent; s != full; s = static_cast<Mask>(parent[s])) probes.push_back(probe_of[s]);
  ProbeSchedule schedule;
  schedule.mode = GameMode::prox;
  schedule.cops = p;
  for (auto it = probes.rbegin(); it != probes.rend(); ++it) schedule.rounds.push_back(VertexSet::from_mask(n, *it));
  result.winnable = true;
  result.witness = std::move(schedule);
  return result;
}

ProxNumberResult prox_solve(const Graph& g, const Caps& caps) {
  if (g.order() > caps.prox) throw SizeError("prox solver order", g.order(), caps.prox);
  if (g.order() == 0) return {0, std::nullopt};
  for (std::size_t p = 1;; ++p) {
    auto r = prox_winnable(g, p, caps);
    if (r.winnable) return {p, std::move(r.witness)};
  }
}

std::size_t prox_number(const Graph& g, const Caps& caps) { return prox_solve(g, caps).value; }

}  // namespace lzl
