#pragma once

#include <functional>

#include "lzl/caps.hpp"
#include "lzl/graph.hpp"
#include "lzl/schedule.hpp"

namespace lzl {

/// Split of a vertex part W into A, B, C with no A-B edge and
/// |A|, |B| <= (2/3)|W|.
struct Separation {
  VertexSet a;
  VertexSet b;
  VertexSet c;
};

/// Returns a separation of `part` (a subset of g's vertices).
using SeparatorOracle = std::function<Separation(const Graph&, const VertexSet&)>;

/// Throws ValidationError unless s partitions `part` with no A-B edge and both
/// sides within two thirds of |part|.
void validate_separation(const Graph& g, const VertexSet& part, const Separation& s);

/// Smallest balanced separator of the part by exhaustive search over C, sizes
/// ascending. Requires |part| <= caps.separator.
Separation balanced_separator_brute(const Graph& g, const VertexSet& part, const Caps& caps = {});

struct SeparatorSchedule {
  ProbeSchedule schedule;
  /// max |C| / sqrt(|W|) over every separation used.
  double separator_factor = 0.0;
  /// factor * sqrt(n) / (1 - sqrt(2/3)) + sqrt(n).
  double budget_bound = 0.0;
  std::size_t depth = 0;
};

/// Cops hold C every round while the recursion clears A, then B. Parts with
/// |W|^2 <= n are probed in full in a single round. Prox mode; the budget is
/// the largest round.
SeparatorSchedule strat_separator(const Graph& g, const SeparatorOracle& oracle);
SeparatorSchedule strat_separator(const Graph& g, const Caps& caps = {});

}  // namespace lzl
