#include "lzl/domination.hpp"

#include <cstdint>

#include "lzl/errors.hpp"

namespace lzl {

bool is_dominating(const Graph& g, const VertexSet& d) {
  return closed_neighborhood(g, d) == g.all_vertices();
}

VertexSet min_dominating_set(const Graph& g, const Caps& caps) {
  const std::size_t n = g.order();
  if (n > caps.domination) throw SizeError("domination search order", n, caps.domination);
  if (n > 63) throw SizeError("domination search order", n, 63);
  const auto closed = g.closed_masks();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  // Index combinations of each size in lexicographic order; the first hit wins.
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint64_t covered = 0;
      for (std::size_t v : idx) covered |= closed[v];
      if (covered == all) {
        VertexSet d(n);
        for (std::size_t v : idx) d.insert(v);
        return d;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return g.all_vertices();
}

namespace {

class DominationPolicy : public Policy {
 public:
  DominationPolicy(const Graph& g, VertexSet d) : g_(g), d_(std::move(d)), budget_(d_.count() + max_degree(g)) {}

  std::string name() const override { return "domination"; }
  std::size_t budget() const override { return budget_; }
  PolicyState initial_state() const override { return {-1}; }

  VertexSet probe(const PolicyState& state, const VertexSet&) const override {
    VertexSet out = d_;
    if (state[0] >= 0) out |= g_.neighbors(static_cast<Vertex>(state[0]));
    return out;
  }

  PolicyState advance(const PolicyState&, const VertexSet& probes, const VertexSet&,
                      const std::vector<Outcome>& observation) const override {
    std::size_t i = 0;
    for (Vertex v : probes) {
      if (observation[i++] == Outcome::one && d_.contains(v)) return {static_cast<std::int64_t>(v)};
    }
    return {-1};
  }

 private:
  Graph g_;
  VertexSet d_;
  std::size_t budget_;
};

}  // namespace

std::unique_ptr<Policy> strat_domination(const Graph& g, const VertexSet& d) {
  if (!is_c4_free(g)) throw PreconditionError("domination strategy needs a C4-free graph");
  if (d.universe() != g.order() || !is_dominating(g, d)) {
    throw PreconditionError("domination strategy: " + d.to_string() + " is not a dominating set");
  }
  return std::make_unique<DominationPolicy>(g, d);
}

}  // namespace lzl
