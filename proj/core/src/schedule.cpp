#include "lzl/schedule.hpp"

#include <algorithm>

#include "lzl/errors.hpp"

namespace lzl {

std::size_t ProbeSchedule::max_round_size() const {
  std::size_t best = 0;
  for (const auto& r : rounds) best = std::max(best, r.count());
  return best;
}

void ProbeSchedule::validate(const Graph& g) const {
  for (std::size_t t = 0; t < rounds.size(); ++t) {
    if (rounds[t].universe() != g.order()) {
      throw ValidationError("schedule round " + std::to_string(t + 1) + " is over " +
                            std::to_string(rounds[t].universe()) + " vertices, graph has " +
                            std::to_string(g.order()));
    }
    if (rounds[t].count() > cops) {
      throw ValidationError("schedule round " + std::to_string(t + 1) + " probes " +
                            std::to_string(rounds[t].count()) + " vertices with a budget of " +
                            std::to_string(cops));
    }
  }
}

}  // namespace lzl
