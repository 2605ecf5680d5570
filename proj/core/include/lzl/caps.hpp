#pragma once

#include <cstddef>
#include <string>

namespace lzl {

/// Size limits for every engine. Exact solvers are exponential; the caps keep
/// accidental invocations on large graphs from running for hours.
struct Caps {
  static constexpr std::size_t kDefaultVertices = 64;
  static constexpr std::size_t kWideVertices = 256;
  /// Hard ceiling for explicitly raised vertex caps (large verification runs).
  static constexpr std::size_t kMaxVertices = std::size_t{1} << 16;

  std::size_t vertices = kDefaultVertices;
  std::size_t iso = 25;
  std::size_t prox = 16;
  std::size_t zeta = 12;
  std::size_t pathwidth = 10;
  std::size_t separator = 20;
  std::size_t domination = 24;

  /// Applies an `LZL_MAX_N`-style override. Accepts either a single number
  /// (applied to every cap) or a comma list such as "prox=18,zeta=13".
  /// Throws ValidationError on malformed text.
  void apply_override(const std::string& spec);

  /// Caps from the environment (`LZL_MAX_N`), starting from the defaults.
  static Caps from_environment();

  std::string describe() const;
};

/// Worker count from `LZL_THREADS`, defaulting to the hardware concurrency.
std::size_t worker_count();

}  // namespace lzl
