#include "lzl/iso.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "lzl/errors.hpp"

namespace lzl {

std::string to_string(BoundaryMode mode) { return mode == BoundaryMode::vertex ? "vertex" : "edge"; }

BoundaryMode parse_boundary_mode(const std::string& text) {
  if (text == "vertex" || text == "v") return BoundaryMode::vertex;
  if (text == "edge" || text == "e") return BoundaryMode::edge;
  throw ValidationError("unknown boundary mode '" + text + "' (expected vertex or edge)");
}

bool IsoProfile::complete() const {
  for (std::size_t k = 1; k <= order(); ++k) {
    if (!exact(k)) return false;
  }
  return true;
}

std::vector<std::size_t> IsoProfile::values() const { return lower; }

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct ChunkResult {
  std::vector<std::size_t> best_v;
  std::vector<std::size_t> best_e;
  std::uint64_t visited = 0;
  bool finished = true;
};

// Walks every subset whose high bits equal `prefix`, toggling the low bits in
// Gray-code order. Boundary sizes are kept incrementally: cnt[v] counts the
// neighbours of v inside S.
ChunkResult enumerate_chunk(const std::vector<std::vector<int>>& adj, std::size_t low_bits, std::uint64_t prefix,
                            std::uint64_t quota) {
  const std::size_t n = adj.size();
  ChunkResult out;
  out.best_v.assign(n + 1, kNone);
  out.best_e.assign(n + 1, kNone);

  std::vector<int> cnt(n, 0);
  std::vector<char> in(n, 0);
  long vb = 0;
  long eb = 0;
  std::size_t size = 0;

  auto add = [&](std::size_t x) {
    if (cnt[x] > 0) --vb;
    eb += static_cast<long>(adj[x].size()) - 2L * cnt[x];
    in[x] = 1;
    ++size;
    for (int y : adj[x]) {
      if (++cnt[y] == 1 && !in[y]) ++vb;
    }
  };
  auto remove = [&](std::size_t x) {
    in[x] = 0;
    --size;
    for (int y : adj[x]) {
      if (--cnt[y] == 0 && !in[y]) --vb;
    }
    if (cnt[x] > 0) ++vb;
    eb -= static_cast<long>(adj[x].size()) - 2L * cnt[x];
  };

  for (std::size_t v = low_bits; v < n; ++v) {
    if ((prefix >> (v - low_bits)) & 1U) add(v);
  }
  auto record = [&] {
    auto& bv = out.best_v[size];
    auto& be = out.best_e[size];
    bv = std::min(bv, static_cast<std::size_t>(vb));
    be = std::min(be, static_cast<std::size_t>(eb));
  };

  const std::uint64_t total = std::uint64_t{1} << low_bits;
  record();
  out.visited = 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    if (quota != 0 && out.visited >= quota) {
      out.finished = false;
      break;
    }
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    if (in[bit]) {
      remove(bit);
    } else {
      add(bit);
    }
    record();
    ++out.visited;
  }
  return out;
}

}  // namespace

std::pair<IsoProfile, IsoProfile> iso_profiles(const Graph& g, std::uint64_t budget, const Caps& caps) {
  const std::size_t n = g.order();
  if (n > caps.iso) throw SizeError("isoperimetric enumeration order", n, caps.iso);
  if (!is_connected(g)) throw PreconditionError("isoperimetric profile needs a connected graph");

  std::vector<std::vector<int>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbor_list(v)) adj[v].push_back(static_cast<int>(u));
  }

  const std::size_t prefix_bits = std::min<std::size_t>(n, 6);
  const std::size_t low_bits = n - prefix_bits;
  const std::uint64_t chunks = std::uint64_t{1} << prefix_bits;
  std::uint64_t quota = 0;
  if (budget != 0) quota = std::max<std::uint64_t>(1, budget / chunks);

  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) results[c] = enumerate_chunk(adj, low_bits, c, quota);
  };
  const std::size_t threads = std::min<std::size_t>(worker_count(), chunks);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<std::size_t> best_v(n + 1, kNone);
  std::vector<std::size_t> best_e(n + 1, kNone);
  bool finished = true;
  std::uint64_t visited = 0;
  for (const auto& r : results) {
    for (std::size_t k = 0; k <= n; ++k) {
      best_v[k] = std::min(best_v[k], r.best_v[k]);
      best_e[k] = std::min(best_e[k], r.best_e[k]);
    }
    finished = finished && r.finished;
    visited += r.visited;
  }

  IsoProfile pv{BoundaryMode::vertex, {}, {}, visited};
  IsoProfile pe{BoundaryMode::edge, {}, {}, visited};
  const std::size_t dmin = min_degree(g);
  for (std::size_t k = 1; k <= n; ++k) {
    if (finished) {
      pv.lower.push_back(best_v[k]);
      pv.upper.push_back(best_v[k]);
      pe.lower.push_back(best_e[k]);
      pe.upper.push_back(best_e[k]);
      continue;
    }
    // Values that hold on every connected graph, independent of enumeration.
    std::size_t lv = 1;
    std::size_t le = 1;
    std::size_t uv = best_v[k] == kNone ? n - k : best_v[k];
    std::size_t ue = best_e[k] == kNone ? g.size() : best_e[k];
    if (k == n) {
      lv = uv = le = ue = 0;
    } else {
      if (k == 1) {
        lv = uv = dmin;
        le = ue = dmin;
      }
      if (k + 1 == n) {
        lv = uv = 1;
        le = ue = dmin;
      }
    }
    pv.lower.push_back(lv);
    pv.upper.push_back(uv);
    pe.lower.push_back(le);
    pe.upper.push_back(ue);
  }
  return {std::move(pv), std::move(pe)};
}

IsoProfile iso_profile(const Graph& g, BoundaryMode mode, std::uint64_t budget, const Caps& caps) {
  auto both = iso_profiles(g, budget, caps);
  return mode == BoundaryMode::vertex ? std::move(both.first) : std::move(both.second);
}

std::size_t iso_peak(const IsoProfile& profile) {
  if (!profile.complete()) throw PreconditionError("isoperimetric peak needs a fully exact profile");
  std::size_t best = 0;
  for (std::size_t v : profile.lower) best = std::max(best, v);
  return best;
}

std::size_t h_index(const std::vector<std::size_t>& values) {
  for (std::size_t h = values.size(); h >= 1; --h) {
    std::size_t run = 0;
    for (std::size_t v : values) {
      run = v >= h ? run + 1 : 0;
      if (run >= h) return h;
    }
  }
  return 0;
}

std::size_t h_index(const IsoProfile& profile) {
  if (!profile.complete()) throw PreconditionError("h-index needs a fully exact profile");
  return h_index(profile.lower);
}

std::size_t h_index_graph(const Graph& g, BoundaryMode mode, const Caps& caps) {
  return h_index(iso_profile(g, mode, 0, caps));
}

std::string profile_csv(const IsoProfile& profile) {
  std::ostringstream out;
  out << "k,phi,exact\n";
  for (std::size_t k = 1; k <= profile.order(); ++k) {
    out << k << ',' << profile.value(k) << ',' << (profile.exact(k) ? 1 : 0) << '\n';
  }
  return out.str();
}

ProxLowerBounds prox_lower_bounds(std::size_t hv, std::size_t he, std::size_t max_degree) {
  if (max_degree == 0) throw PreconditionError("h-index bounds need maximum degree >= 1");
  return {hv / (max_degree + 1) + 1, he / ((max_degree + 1) * max_degree) + 1};
}

std::size_t peak_to_h_lower(std::size_t peak, std::size_t max_degree, BoundaryMode mode) {
  if (max_degree == 0) throw PreconditionError("peak bounds need maximum degree >= 1");
  if (mode == BoundaryMode::vertex) {
    // (Phi/2)(1 + 1/(2D+1)) = Phi(D+1)/(2D+1)
    const std::size_t num = peak * (max_degree + 1);
    const std::size_t den = 2 * max_degree + 1;
    return (num + den - 1) / den;
  }
  return (2 * peak + max_degree + 1) / (max_degree + 2);
}

GridProfileClaim grid_profile_oracle(std::size_t n) {
  if (n < 2) throw PreconditionError("grid profile claim needs n >= 2");
  return {(n * n - 3 * n + 4) / 2, (n * n + n - 2) / 2, n};
}

KaryBoundReport kary_bound_report(std::size_t k, std::size_t d) {
  if (k < 2 || d < 2) throw PreconditionError("k-ary bounds need k >= 2 and d >= 2");
  KaryBoundReport r;
  // (3/80)(d-2)(2/(2k+3)) = 6(d-2) / (80(2k+3))
  std::uint64_t num = 6 * static_cast<std::uint64_t>(d - 2);
  std::uint64_t den = 80 * static_cast<std::uint64_t>(2 * k + 3);
  const std::uint64_t g = std::gcd(num, den);
  r.lower_num = num / g;
  r.lower_den = den / g;
  if (num == 0) r.lower_den = 1;
  r.lower_integer = static_cast<std::size_t>(r.lower_num / r.lower_den) + 1;
  r.upper = d / 4 + 2;
  if (k == 2) r.binary_asymptotic = "d/60 - O(log d) < prox";
  return r;
}

}  // namespace lzl
