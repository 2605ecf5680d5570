#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzl/graph.hpp"

namespace lzl {

enum class Target { prox, zeta };
enum class BoundKind { lower, upper };
std::string to_string(Target t);
std::string to_string(BoundKind k);

struct Bound {
  Target target = Target::prox;
  BoundKind kind = BoundKind::lower;
  std::size_t value = 0;
  std::string rule;
};

/// Whatever is already known about the graph. Every field is optional.
struct Quantities {
  std::optional<std::size_t> prox;  // exact solver values
  std::optional<std::size_t> zeta;
  std::optional<std::size_t> hv;    // h-indices of exact profiles
  std::optional<std::size_t> he;
  std::optional<std::size_t> peak_v;
  std::optional<std::size_t> peak_e;
  std::optional<std::size_t> pathwidth;
  std::optional<std::size_t> domination;
};

struct Interval {
  std::size_t lower = 0;
  std::optional<std::size_t> upper;
};

struct BoundsReport {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  bool tree = false;
  bool c4_free = false;
  std::optional<std::size_t> grid_side;
  Quantities quantities;
  std::vector<Bound> bounds;
  /// Asymptotic statements that carry no computable constant.
  std::vector<std::string> symbolic;
  /// Lower bound above an upper bound for the same target.
  std::vector<std::string> diagnostics;
  /// [ceil(n/5)+1, ceil(n/5)+4] for square grids.
  std::optional<Interval> grid_window;

  /// Best lower and upper bounds after applying prox <= zeta in both directions.
  Interval interval(Target t) const;
};

/// Instantiates every inequality whose hypotheses hold. Tree-shape rules need
/// order <= 4096 (they try every root).
BoundsReport assemble_bounds(const Graph& g, const Quantities& q, const std::string& graph_id = "");

/// (k, d) when g is a complete k-ary tree of depth d >= 1 (k >= 2).
std::optional<std::pair<std::size_t, std::size_t>> detect_kary(const Graph& g);

}  // namespace lzl
