#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lzl/caps.hpp"
#include "lzl/graph.hpp"

namespace lzl {

/// Outcome of one probe: the robber is on the probed vertex, adjacent to it,
/// or further away.
enum class Outcome : std::uint8_t { zero, one, star };

char to_char(Outcome o);

/// Outcomes of the probes in U (ascending vertex order) for a robber on x.
std::vector<Outcome> observe(const Graph& g, Vertex x, const VertexSet& probes);
std::string observation_string(const std::vector<Outcome>& obs);

/// Classes of M under equal observation vectors, ordered by smallest member.
std::vector<VertexSet> partition_candidates(const Graph& g, const VertexSet& candidates, const VertexSet& probes);

/// Least-fixed-point test: can k probes per round force a unique candidate
/// from an unknown start? Requires order <= caps.zeta.
bool zeta_winnable(const Graph& g, std::size_t k, const Caps& caps = {});

/// Minimum k with zeta_winnable true; 0 on the one-vertex graph.
std::size_t zeta_number(const Graph& g, const Caps& caps = {});

}  // namespace lzl
