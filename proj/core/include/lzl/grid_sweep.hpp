#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzl/graph.hpp"
#include "lzl/prox.hpp"
#include "lzl/schedule.hpp"

namespace lzl {

// Coordinates are (row, col), row 1 at the bottom. Forced regions are the
// cells on or above a staircase f_{i,j}(c) inside a panel of width m.

struct Cell {
  long row = 0;
  long col = 0;
  auto operator<=>(const Cell&) const = default;
};

/// Staircase height: i+1+floor((c-j)/2) right of the focus column j,
/// i+ceil((c-j)/2) at or left of it.
long f_eval(long i, long j, long c);

struct RegionIndex {
  long i = 0;
  long j = 0;  // column of focus, 0..m
  long m = 1;  // panel width
  long n = 1;  // panel height
};

/// F_{i,j} on the n x m panel lattice; ids (row-1)*m + (col-1).
VertexSet forced_region(const RegionIndex& idx);

/// S_{i,j}: cells (f(c)+1, c) for c in [lo, hi] with c-j odd and positive, or
/// c-j even and non-positive. Rows are not clipped.
std::vector<Cell> probe_set(long i, long j, long lo, long hi);

/// Index after the natural probe: (i+2, j-1), re-indexed to (i+(m+1)/2, m)
/// when the focus reaches column 0.
RegionIndex natural_step(RegionIndex idx);
/// Index after a robber move with no probe: (i-1, j).
RegionIndex robber_step(RegionIndex idx);

/// The odd m with 0 <= 5m - n <= 9.
long m_of_n(long n);

struct PanelPlan {
  int panel = 1;          // 1..5
  long col_offset = 0;    // (panel-1) m
  long start_round = 1;   // = panel
  long start_i = 0;       // -2m + (panel-1)(m-1)/2
};
PanelPlan panel_plan(int panel, long m);

struct TaggedProbe {
  Cell cell;       // extended-lattice coordinate, offset included
  int panel = 1;
  long i = 0;      // index of the S_{i,j} this probe belongs to
  long j = 0;
};

/// Unclipped schedule on the extended lattice, one entry per round.
struct ExtendedSchedule {
  long n = 0;
  long m = 0;
  int panels = 5;
  std::vector<std::vector<TaggedProbe>> rounds;
  std::size_t max_round_size() const;
};

/// One panel (panel 1 plan, columns [0, m+1]) swept until its forced region is
/// empty, plus a margin of 5m rounds. Throws PreconditionError for even m.
ExtendedSchedule panel_schedule(long m, long n);
/// All five panels on an n x 5m strip; m = m_of_n(n).
ExtendedSchedule five_panel_schedule(long n);

/// Drops probes outside [0, rows+1] x [0, cols+1], folds the border rows and
/// columns inward, and merges duplicates. Output is a prox schedule on
/// rect_grid(rows, cols).
ProbeSchedule clip_schedule(const ExtendedSchedule& ext, long rows, long cols);
ProbeSchedule clip_schedule(const ExtendedSchedule& ext, long n);

/// First violation of the cadence property: panel p's probes in round
/// p + 5m*alpha are exactly S_{start_i + alpha, m} shifted by the panel offset.
std::optional<std::string> check_cadence(const ExtendedSchedule& ext);
/// First violation of the panel shift property: each probe (r, c) of panel p in
/// round t has a panel p+1 probe (r + (m-1)/2, c + m) in round t+1.
std::optional<std::string> check_panel_shift(const ExtendedSchedule& ext);

struct GridStrategy {
  long n = 0;
  long m = 0;
  ProbeSchedule schedule;
  ScheduleTrace trace;
};

/// Clipped five-panel schedule for G_{n,n}, verified by run_schedule. Throws
/// VerificationError, naming the last contaminated count, when it fails.
GridStrategy grid_strategy(long n);

}  // namespace lzl
