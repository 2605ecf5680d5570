#include "lzl/pathwidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "lzl/errors.hpp"

namespace lzl {

std::size_t PathDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.count());
  return best == 0 ? 0 : best - 1;
}

std::vector<DecompositionViolation> validate_path_decomposition(const Graph& g, const std::vector<VertexSet>& bags) {
  std::vector<DecompositionViolation> out;
  const std::size_t n = g.order();
  for (const auto& b : bags) {
    if (b.universe() != n) {
      out.push_back({1, "bag over the wrong vertex universe"});
      return out;
    }
  }
  VertexSet covered(n);
  for (const auto& b : bags) covered |= b;
  for (Vertex v : covered.complement()) out.push_back({1, "vertex " + std::to_string(v + 1) + " is in no bag"});
  for (const auto& [u, v] : g.edges()) {
    const bool ok = std::any_of(bags.begin(), bags.end(), [&](const VertexSet& b) { return b.contains(u) && b.contains(v); });
    if (!ok) {
      out.push_back({2, "edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " is in no bag"});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    std::size_t first = bags.size();
    std::size_t last = 0;
    for (std::size_t i = 0; i < bags.size(); ++i) {
      if (!bags[i].contains(v)) continue;
      first = std::min(first, i);
      last = i;
    }
    for (std::size_t i = first; i < last; ++i) {
      if (!bags[i].contains(v)) {
        out.push_back({3, "vertex " + std::to_string(v + 1) + " is in bags " + std::to_string(first + 1) + " and " +
                              std::to_string(last + 1) + " but not in bag " + std::to_string(i + 1)});
        break;
      }
    }
  }
  return out;
}

PathDecomposition normalize_path_decomposition(const Graph& g, const std::vector<VertexSet>& bags) {
  const auto violations = validate_path_decomposition(g, bags);
  if (!violations.empty()) {
    throw ValidationError("invalid path decomposition: property (" + std::to_string(violations.front().property) +
                          ") " + violations.front().detail);
  }
  std::vector<VertexSet> b = bags;
  b.erase(std::remove_if(b.begin(), b.end(), [](const VertexSet& s) { return s.empty(); }), b.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < b.size() && b.size() > 1; ++i) {
      const bool inside_next = i + 1 < b.size() && b[i].is_subset_of(b[i + 1]);
      const bool inside_prev = i > 0 && b[i].is_subset_of(b[i - 1]);
      if (inside_next || inside_prev) {
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      for (Vertex u : b[i] - b[i + 1]) {
        if (!g.neighbors(u).intersects(b[i])) {
          b[i].erase(u);
          changed = true;
        }
      }
    }
  }
  return {b};
}

PathDecomposition brute_pathwidth(const Graph& g, const Caps& caps) {
  const std::size_t n = g.order();
  if (n > caps.pathwidth) throw SizeError("pathwidth search order", n, caps.pathwidth);
  if (n > 24) throw SizeError("pathwidth search order", n, 24);
  if (n == 0) return {};
  using Mask = std::uint32_t;
  std::vector<Mask> open(n);
  {
    const auto om = g.open_masks();
    for (std::size_t v = 0; v < n; ++v) open[v] = static_cast<Mask>(om[v]);
  }
  const std::size_t states = std::size_t{1} << n;
  // sep(X) = vertices of X with a neighbour outside X.
  auto sep = [&](Mask x) {
    std::size_t count = 0;
    for (Mask rest = x; rest != 0; rest &= rest - 1) {
      if ((open[std::countr_zero(rest)] & ~x) != 0) ++count;
    }
    return count;
  };
  constexpr std::size_t kInf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best(states, kInf);
  std::vector<std::int8_t> last(states, -1);
  best[0] = 0;
  for (Mask s = 0; s < states; ++s) {
    if (best[s] == kInf) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if ((s >> v) & 1U) continue;
      const Mask t = s | (Mask{1} << v);
      const std::size_t cost = std::max(best[s], sep(t));
      if (cost < best[t]) {
        best[t] = cost;
        last[t] = static_cast<std::int8_t>(v);
      }
    }
  }
  std::vector<Vertex> order;
  for (Mask s = static_cast<Mask>(states - 1); s != 0; s &= ~(Mask{1} << last[s])) order.push_back(static_cast<Vertex>(last[s]));
  std::reverse(order.begin(), order.end());

  PathDecomposition pd;
  Mask prefix = 0;
  for (Vertex v : order) {
    VertexSet bag(n, {v});
    const Mask suffix = ~prefix;  // v and everything after it
    for (Mask rest = prefix; rest != 0; rest &= rest - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(rest));
      if ((open[u] & suffix) != 0) bag.insert(u);
    }
    pd.bags.push_back(std::move(bag));
    prefix |= Mask{1} << v;
  }
  return pd;
}

std::unique_ptr<Policy> strat_pathwidth(const Graph& g, const PathDecomposition& decomposition) {
  if (g.order() < 2) throw PreconditionError("pathwidth strategy needs at least two vertices");
  const auto& b = decomposition.bags;
  const auto violations = validate_path_decomposition(g, b);
  if (!violations.empty()) throw PreconditionError("pathwidth strategy: " + violations.front().detail);
  const std::size_t k = b.size();
  ProbeSchedule s;
  s.mode = GameMode::zeta;
  s.cops = decomposition.width();
  for (std::size_t i = 0; i < k; ++i) {
    VertexSet leaving = b[i];
    if (i + 1 < k) {
      leaving -= b[i + 1];
    } else if (i > 0) {
      leaving -= b[i - 1];
    }
    if (leaving.empty()) throw PreconditionError("pathwidth strategy needs a normalized decomposition");
    const Vertex u = *leaving.first();
    const auto v = (g.neighbors(u) & b[i]).first();
    if (!v) throw PreconditionError("pathwidth strategy needs a normalized decomposition");
    VertexSet probe = b[i];
    probe.erase(*v);
    s.rounds.push_back(std::move(probe));
  }
  return std::make_unique<SchedulePolicy>("pathwidth", std::move(s), false);
}

}  // namespace lzl
