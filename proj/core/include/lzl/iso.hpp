#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lzl/caps.hpp"
#include "lzl/graph.hpp"

namespace lzl {

enum class BoundaryMode { vertex, edge };

std::string to_string(BoundaryMode mode);
/// Accepts "vertex"/"v" and "edge"/"e"; throws ValidationError otherwise.
BoundaryMode parse_boundary_mode(const std::string& text);

/// Isoperimetric profile Phi(G, k) for k = 1..n.
///
/// Each entry holds a certified lower bound and the best value found. When
/// enumeration finished the two agree and the entry is exact.
struct IsoProfile {
  BoundaryMode mode = BoundaryMode::vertex;
  std::vector<std::size_t> lower;  // index k-1
  std::vector<std::size_t> upper;  // index k-1
  std::uint64_t subsets_visited = 0;

  std::size_t order() const noexcept { return lower.size(); }
  bool exact(std::size_t k) const { return lower.at(k - 1) == upper.at(k - 1); }
  bool complete() const;
  /// Exact value; the certified lower bound when the entry is not exact.
  std::size_t value(std::size_t k) const { return lower.at(k - 1); }
  /// Values for k = 1..n, for exact profiles.
  std::vector<std::size_t> values() const;
};

/// Vertex and edge profiles from a single Gray-code pass over all subsets.
///
/// `budget` limits the number of subsets visited (0 = unlimited); a truncated
/// run returns entries flagged inexact instead of failing. Requires a connected
/// graph with order at most caps.iso.
std::pair<IsoProfile, IsoProfile> iso_profiles(const Graph& g, std::uint64_t budget = 0, const Caps& caps = {});
IsoProfile iso_profile(const Graph& g, BoundaryMode mode, std::uint64_t budget = 0, const Caps& caps = {});

/// max_k Phi(G, k). Throws PreconditionError on a partial profile.
std::size_t iso_peak(const IsoProfile& profile);

/// Largest h such that h consecutive entries (inside the sequence) are all >= h.
std::size_t h_index(const std::vector<std::size_t>& values);
std::size_t h_index(const IsoProfile& profile);
std::size_t h_index_graph(const Graph& g, BoundaryMode mode, const Caps& caps = {});

/// "k,phi,exact" rows with a header line.
std::string profile_csv(const IsoProfile& profile);

struct ProxLowerBounds {
  std::size_t from_vertex;  // floor(H_V/(Delta+1)) + 1
  std::size_t from_edge;    // floor(H_E/((Delta+1)Delta)) + 1
};

/// Integer lower bounds on prox from the two h-index inequalities. Requires Delta >= 1.
ProxLowerBounds prox_lower_bounds(std::size_t hv, std::size_t he, std::size_t max_degree);

/// Lower bound on H from the profile peak: vertex mode ceil(Phi(Delta+1)/(2Delta+1)),
/// edge mode ceil(2Phi/(Delta+2)).
std::size_t peak_to_h_lower(std::size_t peak, std::size_t max_degree, BoundaryMode mode);

/// Known middle stretch of the grid vertex profile: Phi_V(G_{n,n}, k) = n on
/// k_lo..k_hi.
struct GridProfileClaim {
  std::size_t k_lo;
  std::size_t k_hi;
  std::size_t value;
};
GridProfileClaim grid_profile_oracle(std::size_t n);

/// Formula-level bounds for complete k-ary trees of depth d.
struct KaryBoundReport {
  std::uint64_t lower_num = 0;  // strict lower bound on prox as a reduced fraction
  std::uint64_t lower_den = 1;
  std::size_t lower_integer = 0;  // floor(lower) + 1
  std::size_t upper = 0;          // floor(d/4) + 2
  std::string binary_asymptotic;  // symbolic only, empty unless k == 2
};
KaryBoundReport kary_bound_report(std::size_t k, std::size_t d);

}  // namespace lzl
