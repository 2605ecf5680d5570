#include "lzl/grid_sweep.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lzl/errors.hpp"
#include "lzl/generators.hpp"

namespace lzl {

namespace {

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
long ceil_div(long a, long b) { return -floor_div(-a, b); }

bool region_empty(long i, long j, long m, long n) {
  for (long c = 1; c <= m; ++c) {
    if (f_eval(i, j, c) <= n) return false;
  }
  return true;
}

}  // namespace

long f_eval(long i, long j, long c) {
  const long d = c - j;
  return d > 0 ? i + 1 + floor_div(d, 2) : i + ceil_div(d, 2);
}

VertexSet forced_region(const RegionIndex& idx) {
  VertexSet out(static_cast<std::size_t>(idx.n * idx.m));
  for (long c = 1; c <= idx.m; ++c) {
    for (long r = std::max(1L, f_eval(idx.i, idx.j, c)); r <= idx.n; ++r) {
      out.insert(static_cast<Vertex>((r - 1) * idx.m + (c - 1)));
    }
  }
  return out;
}

std::vector<Cell> probe_set(long i, long j, long lo, long hi) {
  std::vector<Cell> out;
  for (long c = lo; c <= hi; ++c) {
    const long d = c - j;
    const bool odd = (d % 2) != 0;
    if ((d > 0 && odd) || (d <= 0 && !odd)) out.push_back({f_eval(i, j, c) + 1, c});
  }
  return out;
}

RegionIndex natural_step(RegionIndex idx) {
  idx.i += 2;
  idx.j -= 1;
  if (idx.j == 0) {
    idx.i += (idx.m + 1) / 2;
    idx.j = idx.m;
  }
  return idx;
}

RegionIndex robber_step(RegionIndex idx) {
  idx.i -= 1;
  return idx;
}

long m_of_n(long n) {
  if (n < 1) throw PreconditionError("m_of_n needs n >= 1");
  long m = 1;
  while (5 * m - n < 0) m += 2;
  return m;
}

PanelPlan panel_plan(int panel, long m) {
  return {panel, (panel - 1) * m, panel, -2 * m + (panel - 1) * (m - 1) / 2};
}

std::size_t ExtendedSchedule::max_round_size() const {
  std::size_t best = 0;
  for (const auto& r : rounds) {
    std::set<Cell> distinct;
    for (const auto& p : r) distinct.insert(p.cell);
    best = std::max(best, distinct.size());
  }
  return best;
}

namespace {

ExtendedSchedule sweep(long m, long n, int panels) {
  if (m < 1 || m % 2 == 0) throw PreconditionError("panel width must be odd, got " + std::to_string(m));
  if (n < 1) throw PreconditionError("grid height must be positive");
  struct Live {
    PanelPlan plan;
    RegionIndex idx;
  };
  std::vector<Live> live;
  for (int p = 1; p <= panels; ++p) {
    const PanelPlan plan = panel_plan(p, m);
    live.push_back({plan, {plan.start_i, m, m, n}});
  }
  ExtendedSchedule out;
  out.n = n;
  out.m = m;
  out.panels = panels;
  std::optional<long> done_at;
  for (long t = 1;; ++t) {
    std::vector<TaggedProbe> round;
    for (auto& p : live) {
      const long tau = t - p.plan.start_round;
      if (tau < 0) continue;
      if (tau % 5 == 0 || tau % 5 == 3) {
        for (const Cell& c : probe_set(p.idx.i, p.idx.j, 0, m + 1)) {
          round.push_back({{c.row, c.col + p.plan.col_offset}, p.plan.panel, p.idx.i, p.idx.j});
        }
        p.idx = natural_step(p.idx);
      }
      p.idx = robber_step(p.idx);
    }
    out.rounds.push_back(std::move(round));
    if (!done_at) {
      const bool all_empty = std::all_of(live.begin(), live.end(), [&](const Live& p) {
        return t >= p.plan.start_round && region_empty(p.idx.i + 1, p.idx.j, m, n);
      });
      if (all_empty) done_at = t;
    }
    if (done_at && t >= *done_at + 5 * m) break;
  }
  return out;
}

}  // namespace

ExtendedSchedule panel_schedule(long m, long n) { return sweep(m, n, 1); }

ExtendedSchedule five_panel_schedule(long n) { return sweep(m_of_n(n), n, 5); }

ProbeSchedule clip_schedule(const ExtendedSchedule& ext, long rows, long cols) {
  ProbeSchedule s;
  s.mode = GameMode::prox;
  const auto universe = static_cast<std::size_t>(rows * cols);
  for (const auto& round : ext.rounds) {
    VertexSet r(universe);
    for (const auto& p : round) {
      if (p.cell.row < 0 || p.cell.row > rows + 1 || p.cell.col < 0 || p.cell.col > cols + 1) continue;
      const long row = std::clamp(p.cell.row, 1L, rows);
      const long col = std::clamp(p.cell.col, 1L, cols);
      r.insert(static_cast<Vertex>((row - 1) * cols + (col - 1)));
    }
    s.rounds.push_back(std::move(r));
  }
  s.cops = s.max_round_size();
  s.note("strategy", "grid-sweep");
  s.note("n", std::to_string(ext.n));
  s.note("m", std::to_string(ext.m));
  s.note("panels", std::to_string(ext.panels));
  for (int p = 1; p <= ext.panels; ++p) {
    const PanelPlan plan = panel_plan(p, ext.m);
    s.note("panel-" + std::to_string(p), "cols " + std::to_string(plan.col_offset + 1) + ".." +
                                             std::to_string(plan.col_offset + ext.m) + ", start round " +
                                             std::to_string(plan.start_round) + ", start i " +
                                             std::to_string(plan.start_i) + ", active rounds = " +
                                             std::to_string(p % 5) + "," + std::to_string((p + 3) % 5) + " mod 5");
  }
  s.note("residues", "mod 5");
  s.note("termination", "empty forced regions + 5m rounds");
  return s;
}

ProbeSchedule clip_schedule(const ExtendedSchedule& ext, long n) { return clip_schedule(ext, n, n); }

std::optional<std::string> check_cadence(const ExtendedSchedule& ext) {
  const long m = ext.m;
  for (int p = 1; p <= ext.panels; ++p) {
    const PanelPlan plan = panel_plan(p, m);
    for (long alpha = 0;; ++alpha) {
      const long t = plan.start_round + 5 * m * alpha;
      if (t > static_cast<long>(ext.rounds.size())) break;
      std::vector<Cell> got;
      for (const auto& q : ext.rounds[static_cast<std::size_t>(t - 1)]) {
        if (q.panel == p) got.push_back(q.cell);
      }
      std::vector<Cell> want;
      for (Cell c : probe_set(plan.start_i + alpha, m, 0, m + 1)) want.push_back({c.row, c.col + plan.col_offset});
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      if (got != want) {
        return "panel " + std::to_string(p) + " round " + std::to_string(t) + " does not probe S_{" +
               std::to_string(plan.start_i + alpha) + "," + std::to_string(m) + "}";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_panel_shift(const ExtendedSchedule& ext) {
  const long m = ext.m;
  for (std::size_t t = 0; t + 1 < ext.rounds.size(); ++t) {
    std::set<std::pair<int, Cell>> next;
    for (const auto& q : ext.rounds[t + 1]) next.insert({q.panel, q.cell});
    for (const auto& q : ext.rounds[t]) {
      if (q.panel >= ext.panels) continue;
      const Cell want{q.cell.row + (m - 1) / 2, q.cell.col + m};
      if (!next.contains({q.panel + 1, want})) {
        return "panel " + std::to_string(q.panel) + " probe (" + std::to_string(q.cell.row) + "," +
               std::to_string(q.cell.col) + ") in round " + std::to_string(t + 1) + " has no shifted partner";
      }
    }
  }
  return std::nullopt;
}

GridStrategy grid_strategy(long n) {
  if (n < 2) throw PreconditionError("grid strategy needs n >= 2");
  GridStrategy out;
  out.n = n;
  out.m = m_of_n(n);
  out.schedule = clip_schedule(five_panel_schedule(n), n);
  const Graph g = grid_graph(static_cast<std::size_t>(n), Caps::kMaxVertices);
  out.trace = run_schedule(g, out.schedule);
  if (!out.trace.cleared) {
    throw VerificationError("grid sweep for n=" + std::to_string(n) + " leaves " +
                            std::to_string(out.trace.final_state().count()) + " contaminated vertices after " +
                            std::to_string(out.trace.rounds_run()) + " rounds");
  }
  out.schedule.note("rounds-to-clear", std::to_string(*out.trace.cleared_round));
  return out;
}

}  // namespace lzl
