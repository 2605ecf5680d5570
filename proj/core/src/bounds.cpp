#include "lzl/bounds.hpp"

#include <algorithm>

#include "lzl/grid_sweep.hpp"
#include "lzl/iso.hpp"
#include "lzl/trees.hpp"

namespace lzl {

std::string to_string(Target t) { return t == Target::prox ? "prox" : "zeta"; }
std::string to_string(BoundKind k) { return k == BoundKind::lower ? "lower" : "upper"; }

Interval BoundsReport::interval(Target t) const {
  Interval out;
  for (const auto& b : bounds) {
    if (b.target != t) continue;
    if (b.kind == BoundKind::lower) {
      out.lower = std::max(out.lower, b.value);
    } else if (!out.upper || b.value < *out.upper) {
      out.upper = b.value;
    }
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> detect_kary(const Graph& g) {
  if (!is_tree(g) || g.order() < 3) return std::nullopt;
  for (Vertex r = 0; r < g.order(); ++r) {
    const std::size_t k = g.degree(r);
    if (k < 2) continue;
    const RootedTree rt = root_tree(g, r);
    bool ok = true;
    for (Vertex v = 0; v < g.order() && ok; ++v) {
      const std::size_t c = rt.children[v].size();
      ok = c == 0 ? rt.depth[v] == rt.height : c == k;
    }
    if (ok) return std::make_pair(k, rt.height);
  }
  return std::nullopt;
}

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

struct Builder {
  BoundsReport& r;
  void add(Target t, BoundKind k, std::size_t v, std::string rule) { r.bounds.push_back({t, k, v, std::move(rule)}); }
};

}  // namespace

BoundsReport assemble_bounds(const Graph& g, const Quantities& q, const std::string& graph_id) {
  BoundsReport r;
  r.graph_id = graph_id;
  r.n = g.order();
  r.m = g.size();
  r.max_degree = max_degree(g);
  r.tree = is_tree(g);
  r.c4_free = is_c4_free(g);
  r.grid_side = as_square_grid(g);
  r.quantities = q;
  Builder b{r};
  const std::size_t n = r.n;
  const std::size_t delta = r.max_degree;
  using T = Target;
  using K = BoundKind;

  if (n >= 2) {
    b.add(T::zeta, K::upper, n - 1, "zeta<=n-1");
    b.add(T::prox, K::lower, 1, "n>=2: prox>=1");
  }
  if (q.prox) {
    b.add(T::prox, K::lower, *q.prox, "exact prox solver");
    b.add(T::prox, K::upper, *q.prox, "exact prox solver");
    if (delta >= 1) b.add(T::zeta, K::upper, delta * *q.prox, "zeta<=maxdeg*prox");
    if (n >= 2 && *q.prox >= delta * delta) {
      b.add(T::zeta, K::lower, *q.prox, "prox>=maxdeg^2 => zeta=prox");
      b.add(T::zeta, K::upper, *q.prox, "prox>=maxdeg^2 => zeta=prox");
    }
    if (r.tree) {
      b.add(T::zeta, K::upper, *q.prox + 1, "tree: zeta<=prox+1");
      if (n >= 2 && *q.prox >= delta) b.add(T::zeta, K::upper, *q.prox, "tree: prox>=maxdeg => zeta=prox");
    }
  }
  if (q.zeta) {
    b.add(T::zeta, K::lower, *q.zeta, "exact zeta solver");
    b.add(T::zeta, K::upper, *q.zeta, "exact zeta solver");
  }
  if (delta >= 1) {
    if (q.hv) b.add(T::prox, K::lower, *q.hv / (delta + 1) + 1, "h-index: prox>H_V/(maxdeg+1)");
    if (q.he) b.add(T::prox, K::lower, *q.he / ((delta + 1) * delta) + 1, "h-index: prox>H_E/((maxdeg+1)maxdeg)");
    if (!q.hv && q.peak_v) {
      const std::size_t h = peak_to_h_lower(*q.peak_v, delta, BoundaryMode::vertex);
      b.add(T::prox, K::lower, h / (delta + 1) + 1, "vertex peak: H_V>=" + std::to_string(h) + ", prox>H_V/(maxdeg+1)");
    }
    if (!q.he && q.peak_e) {
      const std::size_t h = peak_to_h_lower(*q.peak_e, delta, BoundaryMode::edge);
      b.add(T::prox, K::lower, h / ((delta + 1) * delta) + 1,
            "edge peak: H_E>=" + std::to_string(h) + ", prox>H_E/((maxdeg+1)maxdeg)");
    }
  }
  if (q.pathwidth) b.add(T::zeta, K::upper, *q.pathwidth, "zeta<=pathwidth");
  if (q.domination && r.c4_free) b.add(T::zeta, K::upper, *q.domination + delta, "c4-free: zeta<=domination+maxdeg");

  if (r.tree && n >= 2 && n <= 4096) {
    b.add(T::zeta, K::upper, ceil_log2(n), "tree: zeta<=ceil(log2 n)");
    const TreeDepth td = tree_depth(g);
    b.add(T::prox, K::upper, td.depth / 4 + 1, "tree depth: prox<=floor(d/4)+1, d=" + std::to_string(td.depth));
    b.add(T::zeta, K::upper, td.depth / 4 + 2, "tree depth: zeta<=floor(d/4)+2, d=" + std::to_string(td.depth));
    std::size_t best = n;
    Vertex best_root = 0;
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t c = level_decomposition(g, v).cop_bound();
      if (c < best) {
        best = c;
        best_root = v;
      }
    }
    const std::string at = ", root " + std::to_string(best_root + 1);
    b.add(T::prox, K::upper, best, "tree levels: prox<=ceil(maxL/3)+1" + at);
    b.add(T::zeta, K::upper, best + 1, "tree levels: zeta<=ceil(maxL/3)+2" + at);
    if (const auto kd = detect_kary(g); kd && kd->second >= 2) {
      const KaryBoundReport kr = kary_bound_report(kd->first, kd->second);
      const std::string frac = std::to_string(kr.lower_num) + "/" + std::to_string(kr.lower_den);
      b.add(T::prox, K::lower, kr.lower_integer, "k-ary isoperimetric: prox>" + frac);
      if (!kr.binary_asymptotic.empty()) r.symbolic.push_back(kr.binary_asymptotic);
    }
  }

  if (r.grid_side) {
    const std::size_t s = *r.grid_side;
    const std::size_t c5 = ceil_div(s, 5);
    const auto m = static_cast<std::size_t>(m_of_n(static_cast<long>(s)));
    b.add(T::prox, K::upper, m + 3, "grid sweep: prox<=m+3, m=" + std::to_string(m));
    b.add(T::prox, K::upper, c5 + 4, "grid: prox<=ceil(n/5)+4");
    if (s >= 11) b.add(T::zeta, K::upper, c5 + 4, "grid n>=11: zeta<=ceil(n/5)+4");
    // The window's lower end is not certified: the profile argument only gives
    // floor(n/5)+1, and the exact solver finds prox = 1 on the 2x2 and 3x3 grids.
    r.symbolic.push_back("grid window: ceil(n/5)+1 <= prox <= ceil(n/5)+4 (lower end uncertified)");
    if (delta >= 1) b.add(T::prox, K::lower, s / (delta + 1) + 1, "grid profile: H_V>=n, prox>H_V/(maxdeg+1)");
    r.grid_window = Interval{c5 + 1, c5 + 4};
  }

  // prox <= zeta in both directions, recorded against the best source bound.
  // Skipped on K1, where zeta = 0 but one probe is still needed to clear.
  const auto best_of = [&](Target t, BoundKind k) -> const Bound* {
    const Bound* best = nullptr;
    for (const auto& x : r.bounds) {
      if (x.target != t || x.kind != k) continue;
      if (!best || (k == BoundKind::lower ? x.value > best->value : x.value < best->value)) best = &x;
    }
    return best;
  };
  if (const Bound* lo = best_of(T::prox, K::lower); lo && r.n >= 2) {
    const Bound copy = *lo;
    b.add(T::zeta, K::lower, copy.value, "prox<=zeta from: " + copy.rule);
  }
  if (const Bound* up = best_of(T::zeta, K::upper); up && r.n >= 2) {
    const Bound copy = *up;
    b.add(T::prox, K::upper, copy.value, "prox<=zeta from: " + copy.rule);
  }
  if (const Bound* up = best_of(T::prox, K::upper); up && delta >= 1) {
    const Bound copy = *up;
    b.add(T::zeta, K::upper, delta * copy.value, "zeta<=maxdeg*prox from: " + copy.rule);
    if (r.tree) b.add(T::zeta, K::upper, copy.value + 1, "tree: zeta<=prox+1 from: " + copy.rule);
  }

  for (Target t : {T::prox, T::zeta}) {
    const Interval iv = r.interval(t);
    if (iv.upper && iv.lower > *iv.upper) {
      r.diagnostics.push_back(to_string(t) + ": lower bound " + std::to_string(iv.lower) + " exceeds upper bound " +
                              std::to_string(*iv.upper));
    }
  }
  return r;
}

}  // namespace lzl
