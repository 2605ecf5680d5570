// Acceptance run: one line per criterion, exit status 1 if any fails.
// Every comparison is exact integer or set equality; there are no tolerances.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lzl/errors.hpp"
#include "lzl/generators.hpp"
#include "lzl/graph_io.hpp"
#include "lzl/grid_sweep.hpp"
#include "lzl/iso.hpp"
#include "lzl/pathwidth.hpp"
#include "lzl/policy.hpp"
#include "lzl/prox.hpp"
#include "lzl/trees.hpp"
#include "lzl/zeta.hpp"
#include "lzl/table.hpp"
#include "oracles.hpp"

using namespace lzl;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Collects failures; keeps the first few messages for the report line.
class Checker {
 public:
  void expect(bool ok, const std::function<std::string()>& message) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(message());
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  Verdict verdict(const std::string& summary) const {
    std::ostringstream out;
    out << summary << "; " << checks_ << " checks";
    if (failures_ > 0) {
      out << ", " << failures_ << " failed";
      for (const auto& m : messages_) out << " | " << m;
    }
    return {failures_ == 0, out.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

std::string describe(const Graph& g) {
  std::string text = serialize_graph(g);
  std::string out;
  for (char c : text) {
    if (c == '\n') {
      out += "; ";
    } else {
      out += c;
    }
  }
  if (out.size() > 2) out.resize(out.size() - 2);
  return out;
}

struct Solved {
  std::string id;
  Graph g;
  std::size_t prox = 0;
  std::size_t zeta = 0;
};

Solved solve(std::string id, Graph g) {
  Solved s{std::move(id), std::move(g)};
  s.prox = prox_number(s.g);
  s.zeta = zeta_number(s.g);
  return s;
}

// Trees for the tree-law and tree-log suites: every labelled tree with n <= 6
// plus 240 uniform Pruefer trees with 2 <= n <= 9.
std::vector<Graph> tree_suite() {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= 6; ++n) oracle::for_each_labelled_tree(n, [&](const Graph& t) { out.push_back(t); });
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> order(2, 9);
  for (int i = 0; i < 240; ++i) out.push_back(oracle::random_tree(order(rng), rng));
  return out;
}

// Graphs solved exactly for the conversion and lower-bound suites (n <= 8).
std::vector<Solved> graph_suite() {
  std::vector<Solved> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t idx = 0;
    for (const Graph& g : oracle::connected_graphs(n)) out.push_back(solve("conn" + std::to_string(n) + "#" + std::to_string(idx++), g));
  }
  std::mt19937_64 rng(77);
  for (std::size_t n : {7u, 8u}) {
    for (int i = 0; i < 40; ++i) {
      const double p = 0.1 + 0.1 * (i % 6);
      out.push_back(solve("rand" + std::to_string(n) + "#" + std::to_string(i), oracle::random_connected_graph(n, p, rng)));
    }
  }
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(solve("K" + std::to_string(n), complete_graph(n)));
  out.push_back(solve("C7", cycle_graph(7)));
  out.push_back(solve("C8", cycle_graph(8)));
  out.push_back(solve("P8", path_graph(8)));
  out.push_back(solve("star7", star_graph(7)));
  out.push_back(solve("grid2x4", rect_grid(2, 4)));
  out.push_back(solve("spider223", spider_graph({2, 2, 3})));
  return out;
}

Verdict exact_values() {
  Checker c;
  for (std::size_t n : {3u, 4u, 5u}) {
    const std::size_t z = zeta_number(complete_graph(n));
    c.expect(z == n - 1, [&] { return "zeta(K" + std::to_string(n) + ")=" + std::to_string(z); });
  }
  const Graph spider = spider_graph({3, 3, 3});
  const std::size_t zs = zeta_number(spider);
  c.expect(zs == 2, [&] { return "zeta(spider333)=" + std::to_string(zs); });
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t p = prox_number(complete_graph(n));
    c.expect(p == 1, [&] { return "prox(K" + std::to_string(n) + ")=" + std::to_string(p); });
  }
  const std::size_t ps = prox_number(spider);
  c.expect(ps <= zs && zs <= ps + 1, [&] { return "spider333 prox " + std::to_string(ps) + " zeta " + std::to_string(zs); });
  c.expect(ps == oracle::prox_number(spider), [&] { return "spider333 prox disagrees with brute force"; });
  return c.verdict("zeta(K3,K4,K5)=2,3,4; zeta(spider333)=" + std::to_string(zs) + ", prox(spider333)=" +
                   std::to_string(ps) + "; prox(K1..K6)=1");
}

Verdict tree_laws(const std::vector<Graph>& trees) {
  Checker c;
  std::mt19937_64 rng(99);
  std::size_t subtrees = 0;
  for (const Graph& t : trees) {
    const std::size_t n = t.order();
    const std::size_t p = prox_number(t);
    const std::size_t z = zeta_number(t);
    const std::size_t pw = brute_pathwidth(t).width();
    c.expect(p <= z && z <= p + 1, [&] { return "prox/zeta gap on " + describe(t); });
    c.expect(z <= ceil_log2(n), [&] { return "zeta>ceil(log2 n) on " + describe(t); });
    c.expect(z <= pw, [&] { return "zeta>pathwidth on " + describe(t); });
    for (int s = 0; s < 3 && n >= 2; ++s) {
      std::uniform_int_distribution<std::size_t> size(1, n - 1);
      const VertexSet keep = oracle::random_connected_subset(t, size(rng), rng);
      const Graph sub = induced_subgraph(t, keep, nullptr, false);
      ++subtrees;
      const std::size_t zsub = zeta_number(sub);
      c.expect(zsub <= z, [&] { return "subtree " + keep.to_string() + " of " + describe(t) + " has larger zeta"; });
    }
  }
  return c.verdict(std::to_string(trees.size()) + " trees (all labelled n<=6, 240 random n<=9), " +
                   std::to_string(subtrees) + " sampled subtrees");
}

Verdict conversion(const std::vector<Solved>& graphs) {
  Checker c;
  std::size_t tpb_cases = 0;
  for (const Solved& s : graphs) {
    const std::size_t delta = max_degree(s.g);
    // K1 is located before any probe (zeta 0) but still needs one probe to clear.
    if (s.g.order() >= 2) c.expect(s.prox <= s.zeta, [&] { return s.id + ": prox>zeta"; });
    c.expect(s.zeta <= delta * s.prox, [&] { return s.id + ": zeta>maxdeg*prox"; });
    if (s.id.size() >= 2 && s.id[0] == 'K') {
      c.expect(s.zeta == delta * s.prox, [&] { return s.id + ": complete graph not tight"; });
    }
    if (s.g.order() >= 2 && s.prox >= delta * delta) {
      ++tpb_cases;
      c.expect(s.zeta == s.prox, [&] { return s.id + ": prox>=maxdeg^2 but zeta!=prox"; });
    }
  }
  return c.verdict(std::to_string(graphs.size()) + " graphs with n<=8 solved exactly, " + std::to_string(tpb_cases) +
                   " meet prox>=maxdeg^2");
}

Verdict isoperimetric() {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (std::size_t n = 2; n <= 6; ++n) {
    std::size_t idx = 0;
    for (const Graph& g : oracle::connected_graphs(n)) graphs.emplace_back("conn" + std::to_string(n) + "#" + std::to_string(idx++), g);
  }
  std::mt19937_64 rng(404);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 7 + static_cast<std::size_t>(i % 10);
    graphs.emplace_back("rand" + std::to_string(n) + "#" + std::to_string(i), oracle::random_connected_graph(n, 0.1 + 0.05 * (i % 7), rng));
  }
  graphs.emplace_back("grid3", grid_graph(3));
  graphs.emplace_back("grid4", grid_graph(4));
  graphs.emplace_back("K5", complete_graph(5));
  graphs.emplace_back("P10", path_graph(10));
  graphs.emplace_back("C8", cycle_graph(8));
  graphs.emplace_back("spider333", spider_graph({3, 3, 3}));
  graphs.emplace_back("T2_3", kary_tree(2, 3));
  graphs.emplace_back("T3_2", kary_tree(3, 2));
  graphs.emplace_back("star10", star_graph(10));

  Checker sandwich, shifts, hsandwich, peak_v, peak_e, grids;
  for (const auto& [id, g] : graphs) {
    const auto [v, e] = iso_profiles(g);
    const std::size_t n = g.order();
    const std::size_t delta = max_degree(g);
    for (std::size_t k = 1; k <= n; ++k) {
      sandwich.expect(v.value(k) <= e.value(k) && e.value(k) <= delta * v.value(k),
                      [&, k] { return id + " k=" + std::to_string(k); });
      if (k >= 2) shifts.expect(v.value(k - 1) + delta >= v.value(k), [&, k] { return id + " vertex k=" + std::to_string(k); });
      if (k + 1 <= n) {
        shifts.expect(v.value(k + 1) + 1 >= v.value(k), [&, k] { return id + " vertex k=" + std::to_string(k); });
        shifts.expect(e.value(k + 1) + delta >= e.value(k), [&, k] { return id + " edge k=" + std::to_string(k); });
      }
    }
    const std::size_t hv = h_index(v);
    const std::size_t he = h_index(e);
    hsandwich.expect(hv <= he && he <= delta * hv, [&] { return id; });
    const std::size_t lv = peak_to_h_lower(iso_peak(v), delta, BoundaryMode::vertex);
    peak_v.expect(lv <= hv, [&] {
      return id + " (peak " + std::to_string(iso_peak(v)) + ", maxdeg " + std::to_string(delta) + ": bound " +
             std::to_string(lv) + " > H_V " + std::to_string(hv) + ")";
    });
    const std::size_t le = peak_to_h_lower(iso_peak(e), delta, BoundaryMode::edge);
    peak_e.expect(le <= he, [&] { return id + " edge bound " + std::to_string(le) + " > H_E " + std::to_string(he); });
  }
  for (std::size_t n : {3u, 4u}) {
    const IsoProfile v = iso_profile(grid_graph(n), BoundaryMode::vertex);
    const GridProfileClaim claim = grid_profile_oracle(n);
    for (std::size_t k = claim.k_lo; k <= claim.k_hi; ++k) {
      grids.expect(v.value(k) == claim.value, [&, k] { return "grid" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  }
  const std::size_t hv4 = h_index(iso_profile(grid_graph(4), BoundaryMode::vertex));
  grids.expect(hv4 == 4, [&] { return "H_V(grid4)=" + std::to_string(hv4); });

  const bool pass = sandwich.failures() + shifts.failures() + hsandwich.failures() + peak_v.failures() +
                        peak_e.failures() + grids.failures() == 0;
  std::ostringstream out;
  out << graphs.size() << " graphs with n<=16";
  const std::pair<const char*, const Checker*> parts[] = {
      {"Phi_V<=Phi_E<=maxdeg*Phi_V", &sandwich}, {"shift bounds", &shifts}, {"H_E/maxdeg<=H_V<=H_E", &hsandwich},
      {"vertex peak bound", &peak_v},           {"edge peak bound", &peak_e}, {"grid window + H_V(grid4)=4", &grids}};
  for (const auto& [name, ch] : parts) {
    const Verdict v = ch->verdict(name);
    out << "\n    " << (v.pass ? "ok   " : "FAIL ") << v.detail;
  }
  return {pass, out.str()};
}

Verdict grid_theorem() {
  Checker c;
  const std::pair<long, std::size_t> cases[] = {{11, 6}, {16, 8}, {21, 8}, {26, 10}};
  std::ostringstream summary;
  for (const auto& [n, budget] : cases) {
    const long m = m_of_n(n);
    try {
      const GridStrategy gs = grid_strategy(n);
      c.expect(gs.trace.cleared, [&] { return "n=" + std::to_string(n) + " not cleared"; });
      c.expect(gs.schedule.cops == budget, [&] {
        return "n=" + std::to_string(n) + " budget " + std::to_string(gs.schedule.cops) + " != " + std::to_string(budget);
      });
      c.expect(gs.schedule.cops == static_cast<std::size_t>(m + 3), [&] { return "n=" + std::to_string(n) + " budget != m+3"; });
      const long lo = (n + 4) / 5 + 1;
      const long hi = (n + 4) / 5 + 4;
      if (lo <= m + 3 && m + 3 <= hi) {
        c.expect(static_cast<long>(gs.schedule.cops) >= lo && static_cast<long>(gs.schedule.cops) <= hi,
                 [&] { return "n=" + std::to_string(n) + " outside window"; });
      }
      const ExtendedSchedule ext = five_panel_schedule(n);
      const auto cadence = check_cadence(ext);
      c.expect(!cadence, [&] { return "n=" + std::to_string(n) + " cadence: " + *cadence; });
      const auto shift = check_panel_shift(ext);
      c.expect(!shift, [&] { return "n=" + std::to_string(n) + " shift: " + *shift; });
      summary << " n=" << n << ":m=" << m << ",cops=" << gs.schedule.cops << ",window=[" << lo << "," << hi
              << "],cleared@" << (gs.trace.cleared_round ? *gs.trace.cleared_round : 0) << "/" << gs.schedule.length();
    } catch (const Error& e) {
      c.expect(false, [&] { return "n=" + std::to_string(n) + ": " + e.what(); });
    }
  }
  return c.verdict("grid sweep" + summary.str());
}

Verdict tree_strategies(const std::vector<Graph>& trees) {
  Checker c;
  for (std::size_t k : {2u, 3u}) {
    for (std::size_t d = 1; d <= 8; ++d) {
      const Graph t = kary_tree(k, d, Caps::kMaxVertices);
      const ProbeSchedule s = strat_tree_depth(t, 0);
      const std::string id = "T" + std::to_string(k) + "_" + std::to_string(d);
      c.expect(s.cops <= d / 4 + 1, [&] { return id + " depth budget " + std::to_string(s.cops); });
      c.expect(run_schedule(t, s).cleared, [&] { return id + " depth schedule not cleared"; });
    }
  }
  const Graph t32 = kary_tree(3, 2);
  const ProbeSchedule l32 = strat_tree_levels(t32, midway_vertex(t32));
  c.expect(l32.cops == 2 && run_schedule(t32, l32).cleared, [&] { return "T3_2 levels budget " + std::to_string(l32.cops); });
  const Graph t33 = kary_tree(3, 3);
  const ProbeSchedule l33 = strat_tree_levels(t33, 0);
  c.expect(l33.cops == 4 && run_schedule(t33, l33).cleared, [&] { return "T3_3 levels budget " + std::to_string(l33.cops); });
  std::size_t worst = 0;
  for (const Graph& t : trees) {
    const auto policy = strat_tree_log(t);
    c.expect(policy->budget() <= ceil_log2(t.order()), [&] { return "tree-log budget on " + describe(t); });
    const SimulationResult r = simulate_policy(t, *policy);
    c.expect(r.outcome == SimulationOutcome::captured, [&] { return "tree-log " + to_string(r.outcome) + " on " + describe(t); });
    worst = std::max(worst, r.worst_round);
  }
  return c.verdict("tree-depth on T2_d,T3_d (d<=8); tree-levels T3_2=" + std::to_string(l32.cops) + ", T3_3=" +
                   std::to_string(l33.cops) + "; tree-log on " + std::to_string(trees.size()) +
                   " trees, worst capture round " + std::to_string(worst));
}

Verdict table_reproduction() {
  Checker c;
  std::ostringstream cells;
  for (const auto& row : cli::table_tab1()) {
    c.expect(row.matches(), [&] { return row.name + " mismatch"; });
    cells << " " << row.name << "=(" << row.computed[0] << "," << row.computed[1] << "," << row.computed[2] << ")";
  }
  return c.verdict("cells" + cells.str());
}

Verdict lower_bound_chain(const std::vector<Solved>& graphs, const std::vector<Graph>& trees) {
  Checker c;
  const Graph g4 = grid_graph(4);
  const std::size_t hv4 = h_index_graph(g4, BoundaryMode::vertex);
  const std::size_t bound = prox_lower_bounds(hv4, 0, max_degree(g4)).from_vertex;
  const std::size_t p4 = prox_number(g4);
  c.expect(bound == 1, [&] { return "grid4 chain gives " + std::to_string(bound); });
  c.expect(p4 >= bound, [&] { return "prox(grid4)=" + std::to_string(p4) + " below chain"; });
  std::size_t checked = 0;
  const auto strict = [&](const std::string& id, const Graph& g, std::size_t prox) {
    ++checked;
    const std::size_t hv = h_index_graph(g, BoundaryMode::vertex);
    const std::size_t delta = max_degree(g);
    c.expect(prox * (delta + 1) > hv, [&] { return id + ": prox " + std::to_string(prox) + " vs H_V " + std::to_string(hv); });
  };
  for (const Solved& s : graphs) strict(s.id, s.g, s.prox);
  for (const Graph& t : trees) strict(describe(t), t, prox_number(t));
  return c.verdict("grid4: H_V=" + std::to_string(hv4) + ", chain prox>=" + std::to_string(bound) + ", exact prox=" +
                   std::to_string(p4) + "; strict inequality on " + std::to_string(checked) + " solved graphs");
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  std::printf("acceptance: all comparisons exact (tolerance 0)\n");
  const auto trees = tree_suite();
  const auto graphs = graph_suite();
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"exact values", exact_values},
      {"tree laws", [&] { return tree_laws(trees); }},
      {"prox to zeta conversion", [&] { return conversion(graphs); }},
      {"isoperimetric suite", isoperimetric},
      {"grid sweep theorem", grid_theorem},
      {"tree strategies", [&] { return tree_strategies(trees); }},
      {"subdivided tree table", table_reproduction},
      {"h-index lower bound", [&] { return lower_bound_chain(graphs, trees); }},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = Clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("criterion %d %s: %s (%.1fs) %s\n", index, name, v.pass ? "PASS" : "FAIL", secs, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  std::printf("acceptance: %d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
