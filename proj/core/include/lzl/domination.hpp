#pragma once

#include <memory>

#include "lzl/caps.hpp"
#include "lzl/graph.hpp"
#include "lzl/policy.hpp"

namespace lzl {

bool is_dominating(const Graph& g, const VertexSet& d);

/// Smallest dominating set, lexicographically first among those of minimum
/// size. Requires order <= caps.domination.
VertexSet min_dominating_set(const Graph& g, const Caps& caps = {});

/// Cops sit on D every round. After a probe of 1 at some v in D, the next round
/// also probes N(v). Budget |D| + max degree. Throws PreconditionError unless
/// g is C4-free and D dominates g.
std::unique_ptr<Policy> strat_domination(const Graph& g, const VertexSet& d);

}  // namespace lzl
