#include "lzl/zeta.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "lzl/errors.hpp"

namespace lzl {

char to_char(Outcome o) {
  switch (o) {
    case Outcome::zero:
      return '0';
    case Outcome::one:
      return '1';
    case Outcome::star:
      return '*';
  }
  return '?';
}

std::vector<Outcome> observe(const Graph& g, Vertex x, const VertexSet& probes) {
  if (x >= g.order()) throw PreconditionError("observe: robber vertex out of range");
  std::vector<Outcome> out;
  out.reserve(probes.count());
  for (Vertex u : probes) {
    if (u == x) {
      out.push_back(Outcome::zero);
    } else if (g.adjacent(u, x)) {
      out.push_back(Outcome::one);
    } else {
      out.push_back(Outcome::star);
    }
  }
  return out;
}

std::string observation_string(const std::vector<Outcome>& obs) {
  std::string s;
  for (Outcome o : obs) s.push_back(to_char(o));
  return s;
}

std::vector<VertexSet> partition_candidates(const Graph& g, const VertexSet& candidates, const VertexSet& probes) {
  // The observation of x is determined by which probe reads 0 and N(x) & U.
  std::map<std::pair<long, VertexSet>, VertexSet> classes;
  for (Vertex x : candidates) {
    const long zero_at = probes.contains(x) ? static_cast<long>(x) : -1;
    auto [it, fresh] = classes.try_emplace({zero_at, g.neighbors(x) & probes}, VertexSet(g.order()));
    it->second.insert(x);
  }
  std::vector<VertexSet> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return *a.first() < *b.first(); });
  return out;
}

namespace {

using Mask = std::uint32_t;

}  // namespace

bool zeta_winnable(const Graph& g, std::size_t k, const Caps& caps) {
  const std::size_t n = g.order();
  if (n > caps.zeta) throw SizeError("zeta solver order", n, caps.zeta);
  if (n > 20) throw SizeError("zeta solver order", n, 20);
  if (n == 1) return true;
  if (k == 0) return false;

  std::vector<Mask> open(n);
  std::vector<Mask> closed(n);
  {
    const auto om = g.open_masks();
    for (std::size_t v = 0; v < n; ++v) {
      open[v] = static_cast<Mask>(om[v]);
      closed[v] = open[v] | (Mask{1} << v);
    }
  }
  auto nbhd = [&](Mask s) {
    Mask out = s;
    for (Mask rest = s; rest != 0; rest &= rest - 1) out |= closed[std::countr_zero(rest)];
    return out;
  };

  const Mask full = (Mask{1} << n) - 1;
  const std::size_t states = std::size_t{1} << n;
  std::vector<char> win(states, 0);
  for (std::size_t v = 0; v < n; ++v) win[Mask{1} << v] = 1;

  // Candidate sets in increasing size so small wins seed larger ones.
  std::vector<Mask> order;
  order.reserve(states);
  for (Mask r = 1; r <= full; ++r) {
    if (std::popcount(r) >= 2) order.push_back(r);
    if (r == full) break;
  }
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

  std::vector<std::size_t> probe_pool;
  std::vector<std::pair<std::uint64_t, Mask>> sig;
  auto forced = [&](Mask m) {
    // Probes outside N[M] observe '*' for every candidate, so they are useless.
    const Mask reach = nbhd(m);
    probe_pool.clear();
    for (Mask rest = reach; rest != 0; rest &= rest - 1) probe_pool.push_back(std::countr_zero(rest));
    const std::size_t c = probe_pool.size();
    const std::size_t r = std::min(k, c);
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      Mask u = 0;
      for (std::size_t i : idx) u |= Mask{1} << probe_pool[i];
      sig.clear();
      for (Mask rest = m; rest != 0; rest &= rest - 1) {
        const auto x = static_cast<std::size_t>(std::countr_zero(rest));
        std::uint64_t key = open[x] & u;
        if ((u >> x) & 1U) key |= std::uint64_t{1} << (32 + x);
        sig.emplace_back(key, Mask{1} << x);
      }
      std::sort(sig.begin(), sig.end());
      bool ok = true;
      for (std::size_t i = 0; i < sig.size() && ok;) {
        Mask cls = 0;
        std::size_t j = i;
        for (; j < sig.size() && sig[j].first == sig[i].first; ++j) cls |= sig[j].second;
        ok = win[cls] != 0;
        i = j;
      }
      if (ok) return true;
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == c - r + (i - 1)) --i;
      if (i == 0) return false;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  };

  bool changed = true;
  while (changed && !win[full]) {
    changed = false;
    for (Mask r : order) {
      if (win[r]) continue;
      if (forced(nbhd(r))) {
        win[r] = 1;
        changed = true;
      }
    }
  }
  return win[full] != 0;
}

std::size_t zeta_number(const Graph& g, const Caps& caps) {
  if (g.order() > caps.zeta) throw SizeError("zeta solver order", g.order(), caps.zeta);
  if (g.order() <= 1) return 0;
  for (std::size_t k = 1;; ++k) {
    if (zeta_winnable(g, k, caps)) return k;
  }
}

}  // namespace lzl
