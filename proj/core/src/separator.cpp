#include "lzl/separator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lzl/errors.hpp"

namespace lzl {

void validate_separation(const Graph& g, const VertexSet& part, const Separation& s) {
  const std::size_t m = part.count();
  if ((s.a | s.b | s.c) != part) throw ValidationError("separation does not cover the part");
  if (s.a.intersects(s.b) || s.a.intersects(s.c) || s.b.intersects(s.c)) {
    throw ValidationError("separation sides overlap");
  }
  for (Vertex v : s.a) {
    if (g.neighbors(v).intersects(s.b)) throw ValidationError("separation has an edge between A and B");
  }
  if (3 * s.a.count() > 2 * m || 3 * s.b.count() > 2 * m) {
    throw ValidationError("separation side larger than two thirds of the part");
  }
}

namespace {

// Groups components into A and B, both within 2m/3, by subset sum over sizes.
bool split_components(const std::vector<VertexSet>& comps, std::size_t m, std::size_t universe, VertexSet& a,
                      VertexSet& b) {
  std::size_t total = 0;
  for (const auto& c : comps) total += c.count();
  const std::size_t limit = 2 * m / 3;
  // reach[s] = index of the component that first reached sum s, or -1.
  std::vector<int> reach(total + 1, -1);
  std::vector<int> prev(total + 1, -1);
  reach[0] = static_cast<int>(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::size_t w = comps[i].count();
    for (std::size_t s = total; s >= w && s > 0; --s) {
      if (reach[s] == -1 && reach[s - w] != -1) {
        reach[s] = static_cast<int>(i);
        prev[s] = static_cast<int>(s - w);
      }
    }
  }
  for (std::size_t s = 0; s <= std::min(limit, total); ++s) {
    if (reach[s] == -1 || total - s > limit) continue;
    a = VertexSet(universe);
    std::vector<bool> used(comps.size(), false);
    for (std::size_t cur = s; cur != 0; cur = static_cast<std::size_t>(prev[cur])) used[static_cast<std::size_t>(reach[cur])] = true;
    b = VertexSet(universe);
    for (std::size_t i = 0; i < comps.size(); ++i) (used[i] ? a : b) |= comps[i];
    return true;
  }
  return false;
}

}  // namespace

Separation balanced_separator_brute(const Graph& g, const VertexSet& part, const Caps& caps) {
  const std::size_t m = part.count();
  if (m > caps.separator) throw SizeError("separator search part", m, caps.separator);
  const std::vector<Vertex> verts = part.to_vector();
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      VertexSet c(g.order());
      for (std::size_t i : idx) c.insert(verts[i]);
      VertexSet a;
      VertexSet b;
      if (split_components(components_within(g, part - c), m, g.order(), a, b)) return {a, b, c};
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {VertexSet(g.order()), VertexSet(g.order()), part};
}

namespace {

struct Recursion {
  const Graph& g;
  const SeparatorOracle& oracle;
  double factor = 0.0;
  std::size_t depth = 0;

  std::vector<VertexSet> clear(const VertexSet& part, std::size_t level) {
    depth = std::max(depth, level);
    const std::size_t m = part.count();
    if (m == 0) return {};
    if (m * m <= g.order()) return {part};
    const Separation s = oracle(g, part);
    validate_separation(g, part, s);
    factor = std::max(factor, static_cast<double>(s.c.count()) / std::sqrt(static_cast<double>(m)));
    std::vector<VertexSet> rounds;
    for (const auto* side : {&s.a, &s.b}) {
      for (auto r : clear(*side, level + 1)) rounds.push_back(r |= s.c);
    }
    if (rounds.empty()) rounds.push_back(s.c);
    return rounds;
  }
};

}  // namespace

SeparatorSchedule strat_separator(const Graph& g, const SeparatorOracle& oracle) {
  Recursion rec{g, oracle};
  SeparatorSchedule out;
  out.schedule.mode = GameMode::prox;
  out.schedule.rounds = rec.clear(g.all_vertices(), 0);
  out.schedule.cops = out.schedule.max_round_size();
  out.separator_factor = rec.factor;
  out.depth = rec.depth;
  const double rn = std::sqrt(static_cast<double>(g.order()));
  out.budget_bound = rec.factor * rn / (1.0 - std::sqrt(2.0 / 3.0)) + rn;
  std::ostringstream f;
  f << rec.factor;
  out.schedule.note("strategy", "separator");
  out.schedule.note("separator-factor", f.str());
  out.schedule.note("recursion-depth", std::to_string(rec.depth));
  return out;
}

SeparatorSchedule strat_separator(const Graph& g, const Caps& caps) {
  return strat_separator(g, [caps](const Graph& h, const VertexSet& part) { return balanced_separator_brute(h, part, caps); });
}

}  // namespace lzl
