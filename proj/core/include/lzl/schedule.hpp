#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lzl/graph.hpp"

namespace lzl {

enum class GameMode { prox, zeta };

/// Non-adaptive cop plan: round t probes rounds[t-1]. Notes are free-form
/// key/value metadata carried into the JSON export.
struct ProbeSchedule {
  GameMode mode = GameMode::prox;
  std::size_t cops = 0;
  std::vector<VertexSet> rounds;
  std::vector<std::pair<std::string, std::string>> notes;

  std::size_t length() const noexcept { return rounds.size(); }
  std::size_t max_round_size() const;
  /// Throws ValidationError if a round exceeds the budget or uses the wrong universe.
  void validate(const Graph& g) const;
  void note(const std::string& key, const std::string& value) { notes.emplace_back(key, value); }
};

}  // namespace lzl
