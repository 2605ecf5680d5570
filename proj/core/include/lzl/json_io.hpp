#pragma once

#include <string>

#include "lzl/bounds.hpp"
#include "lzl/graph.hpp"
#include "lzl/iso.hpp"
#include "lzl/policy.hpp"
#include "lzl/prox.hpp"
#include "lzl/schedule.hpp"

namespace lzl {

/// {"mode","cops","rounds":[[1-based ids]],"meta":{...}}; grids also get
/// "coords" as [row, col] pairs per round.
std::string schedule_to_json(const ProbeSchedule& s, const Graph* g = nullptr);
/// Parses and validates against g. Throws ValidationError on bad content.
ProbeSchedule schedule_from_json(const std::string& text, const Graph& g);

std::string trace_to_json(const ScheduleTrace& trace);
std::string simulation_to_json(const SimulationResult& result, const Policy& policy);
std::string bounds_to_json(const BoundsReport& report);

}  // namespace lzl
