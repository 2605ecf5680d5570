#include "lzl/commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lzl/bounds.hpp"
#include "lzl/cache.hpp"
#include "lzl/domination.hpp"
#include "lzl/errors.hpp"
#include "lzl/generators.hpp"
#include "lzl/graph_io.hpp"
#include "lzl/grid_sweep.hpp"
#include "lzl/iso.hpp"
#include "lzl/json_io.hpp"
#include "lzl/lifting.hpp"
#include "lzl/named_graphs.hpp"
#include "lzl/pathwidth.hpp"
#include "lzl/policy.hpp"
#include "lzl/prox.hpp"
#include "lzl/separator.hpp"
#include "lzl/table.hpp"
#include "lzl/trees.hpp"
#include "lzl/zeta.hpp"

namespace lzl::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct Options {
  bool json_out = false;
  bool timing = false;
  bool no_cache = false;

  std::string graph;
  std::string family;
  long n = 0;
  long k = 0;
  long d = 0;
  long i = 0;
  std::string arms;
  std::string base;
  std::string out_path;

  std::string mode = "vertex";
  bool h_index = false;
  std::uint64_t budget = 0;

  std::string schedule_path;
  std::string emit_path;
  std::string trace_path;
  std::string policy;
  std::string order;
  long root = 0;  // 1-based, 0 = strategy default
  std::size_t round_cap = 1000;
  bool simulate = false;

  std::string strategy;
  std::string table;
};

/// Everything one command produces. Text is the default rendering; the JSON
/// report is printed instead with --json.
struct Report {
  std::string command;
  std::string graph_id;
  std::optional<std::uint64_t> graph_hash;
  json params = json::object();
  json results = json::object();
  json notes = json::array();
  std::ostringstream text;
  int exit_code = kOk;
};

std::string hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ids_text(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<Vertex> parse_order(const std::string& text, const Graph& g) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const long v = std::stol(item);
    if (v < 1 || static_cast<std::size_t>(v) > g.order()) throw ValidationError("vertex " + item + " out of range");
    out.push_back(static_cast<Vertex>(v - 1));
  }
  return out;
}

class Runner {
 public:
  Runner(const Options& o, const Caps& caps) : o_(o), caps_(caps) {}

  Graph load(Report& r) const {
    if (o_.graph.empty()) throw ValidationError("--graph is required");
    Graph g = resolve_graph(o_.graph, cli_vertex_cap(caps_));
    r.graph_id = o_.graph;
    r.graph_hash = graph_hash(g);
    return g;
  }

  Vertex root_or(const Graph& g, Vertex fallback) const {
    if (o_.root == 0) return fallback;
    if (o_.root < 0 || static_cast<std::size_t>(o_.root) > g.order()) {
      throw ValidationError("--root " + std::to_string(o_.root) + " out of range");
    }
    return static_cast<Vertex>(o_.root - 1);
  }

  void gen(Report& r) const {
    FamilyParams p;
    for (auto [key, value] : {std::pair{"n", o_.n}, {"k", o_.k}, {"d", o_.d}, {"i", o_.i}}) {
      if (value != 0) p.values[key] = value;
    }
    if (!o_.arms.empty()) {
      std::stringstream in(o_.arms);
      std::string item;
      while (std::getline(in, item, ',')) p.arms.push_back(std::stoul(item));
    }
    p.base = o_.base;
    const Graph g = generate(o_.family, p, cli_vertex_cap(caps_));
    r.params = {{"family", o_.family}, {"n", o_.n}, {"k", o_.k}, {"d", o_.d}, {"i", o_.i}, {"arms", o_.arms}};
    r.graph_id = o_.family;
    r.graph_hash = graph_hash(g);
    r.results = {{"order", g.order()}, {"edges", g.size()}};
    if (o_.out_path.empty()) {
      r.text << serialize_graph(g);
    } else {
      save_graph(g, o_.out_path);
      r.text << "wrote " << o_.out_path << ": " << g.order() << " vertices, " << g.size() << " edges\n";
    }
  }

  void iso(Report& r) const {
    const Graph g = load(r);
    const BoundaryMode mode = parse_boundary_mode(o_.mode);
    r.params = {{"mode", to_string(mode)}, {"budget", o_.budget}, {"h_index", o_.h_index}};
    const IsoProfile p = iso_profile(g, mode, o_.budget, caps_);
    const std::string tag = mode == BoundaryMode::vertex ? "V" : "E";
    r.results["profile"] = p.values();
    r.results["complete"] = p.complete();
    if (o_.out_path.empty()) {
      r.text << profile_csv(p);
    } else {
      write_file(o_.out_path, profile_csv(p));
    }
    if (p.complete()) {
      r.results["peak"] = iso_peak(p);
      r.text << "peak_" << tag << "=" << iso_peak(p) << "\n";
    } else {
      r.text << "profile truncated by the enumeration budget; inexact entries hold lower bounds\n";
    }
    if (o_.h_index) {
      const std::size_t h = h_index(p);
      r.results["h_index"] = h;
      r.text << "H_" << tag << "=" << h << (p.complete() ? "" : " (lower bound)") << "\n";
    }
  }

  void bounds(Report& r) const {
    const Graph g = load(r);
    Quantities q;
    const std::size_t n = g.order();
    if (n <= caps_.iso) {
      const auto [pv, pe] = iso_profiles(g, 0, caps_);
      if (pv.complete()) {
        q.hv = h_index(pv);
        q.peak_v = iso_peak(pv);
      }
      if (pe.complete()) {
        q.he = h_index(pe);
        q.peak_e = iso_peak(pe);
      }
    } else {
      r.notes.push_back("isoperimetric profile skipped: order " + std::to_string(n) + " above iso cap " +
                        std::to_string(caps_.iso));
    }
    if (n <= caps_.prox) q.prox = prox_number(g, caps_);
    if (n <= caps_.zeta) q.zeta = zeta_number(g, caps_);
    if (n <= caps_.pathwidth) q.pathwidth = brute_pathwidth(g, caps_).width();
    if (n <= caps_.domination && is_c4_free(g)) q.domination = min_dominating_set(g, caps_).count();
    const BoundsReport b = assemble_bounds(g, q, o_.graph);
    r.results = json::parse(bounds_to_json(b));
    r.text << "graph " << o_.graph << ": n=" << b.n << " m=" << b.m << " maxdeg=" << b.max_degree << "\n";
    for (const auto& x : b.bounds) {
      r.text << "  " << to_string(x.target) << " " << (x.kind == BoundKind::lower ? ">= " : "<= ") << x.value
             << "  [" << x.rule << "]\n";
    }
    for (Target t : {Target::prox, Target::zeta}) {
      const Interval iv = b.interval(t);
      r.text << to_string(t) << ": [" << iv.lower << ", " << (iv.upper ? std::to_string(*iv.upper) : "inf") << "]\n";
    }
    if (b.grid_window) {
      r.text << "grid window: [" << b.grid_window->lower << ", " << *b.grid_window->upper << "]\n";
    }
    for (const auto& s : b.symbolic) r.text << "asymptotic: " << s << "\n";
    for (const auto& d : b.diagnostics) r.text << "INCONSISTENT: " << d << "\n";
    if (!b.diagnostics.empty()) r.exit_code = kNegative;
  }

  void prox_solve_cmd(Report& r) const {
    const Graph g = load(r);
    const ProxNumberResult res = prox_solve(g, caps_);
    r.results["prox"] = res.value;
    r.text << "prox=" << res.value << "\n";
    if (res.witness) {
      r.results["witness"] = json::parse(schedule_to_json(*res.witness, &g));
      r.text << "witness:";
      for (const auto& round : res.witness->rounds) r.text << " " << ids_text(round);
      r.text << "\n";
      if (!o_.emit_path.empty()) write_file(o_.emit_path, schedule_to_json(*res.witness, &g));
    }
  }

  void prox_verify(Report& r) const {
    const Graph g = load(r);
    if (o_.schedule_path.empty()) throw ValidationError("--schedule is required");
    const ProbeSchedule s = schedule_from_json(read_file(o_.schedule_path), g);
    r.params["schedule_hash"] = hex(fnv1a(schedule_to_json(s)));
    const ScheduleTrace t = run_schedule(g, s);
    r.results = json::parse(trace_to_json(t));
    if (!o_.trace_path.empty()) write_file(o_.trace_path, trace_to_json(t));
    if (t.cleared) {
      r.text << "cleared in round " << *t.cleared_round << " of " << s.length() << " with " << s.cops << " cops\n";
    } else {
      r.text << "not cleared: " << t.final_state().count() << " contaminated after " << t.rounds_run() << " rounds\n";
      r.exit_code = kNegative;
    }
  }

  void zeta_solve_cmd(Report& r) const {
    const Graph g = load(r);
    const std::size_t z = zeta_number(g, caps_);
    r.results["zeta"] = z;
    r.text << "zeta=" << z << "\n";
  }

  ProbeSchedule prox_schedule_for(const Graph& g) const {
    if (!o_.schedule_path.empty()) return schedule_from_json(read_file(o_.schedule_path), g);
    const ProxNumberResult res = prox_solve(g, caps_);
    if (!res.witness) throw PreconditionError("graph has no prox schedule to lift");
    return *res.witness;
  }

  std::unique_ptr<Policy> make_policy(const std::string& name, const Graph& g, Report& r) const {
    if (name == "all-but-one") return all_but_one_policy(g);
    if (name == "arm-scan") return arm_scan_policy(g);
    if (name == "sweep") return sweep_policy(g, parse_order(o_.order, g));
    if (name == "tree-log") return strat_tree_log(g);
    if (name == "pathwidth") {
      const PathDecomposition pd = normalize_path_decomposition(g, brute_pathwidth(g, caps_).bags);
      r.results["pathwidth"] = pd.width();
      return strat_pathwidth(g, pd);
    }
    if (name == "domination") {
      const VertexSet d = min_dominating_set(g, caps_);
      r.results["dominating_set"] = ids_text(d);
      return strat_domination(g, d);
    }
    if (name == "lift-delta") return lift_delta(g, prox_schedule_for(g));
    if (name == "lift-tpb") return lift_tpb(g, prox_schedule_for(g));
    if (name == "lift-tree") return lift_tree(g, root_or(g, 0), prox_schedule_for(g));
    if (name == "grid-endgame") return grid_endgame_policy(g, prox_schedule_for(g));
    throw ValidationError("unknown policy '" + name + "'");
  }

  void simulate(Report& r, const Graph& g, const Policy& policy) const {
    const SimulationResult res = simulate_policy(g, policy, o_.round_cap);
    r.results["simulation"] = json::parse(simulation_to_json(res, policy));
    r.text << "policy " << policy.name() << ", budget " << policy.budget() << ": " << to_string(res.outcome);
    if (res.outcome == SimulationOutcome::captured) {
      r.text << ", worst round " << res.worst_round << "\n";
      return;
    }
    r.text << "\n";
    for (const auto& step : res.witness) {
      r.text << "  round " << step.round << ": probe " << ids_text(step.probes) << " reads " << step.observation
             << ", candidates " << ids_text(step.posterior) << "\n";
    }
    r.exit_code = kNegative;
  }

  void zeta_simulate(Report& r) const {
    const Graph g = load(r);
    if (o_.policy.empty()) throw ValidationError("--policy is required");
    r.params = {{"policy", o_.policy}, {"order", o_.order}, {"root", o_.root}, {"round_cap", o_.round_cap}};
    const auto policy = make_policy(o_.policy, g, r);
    simulate(r, g, *policy);
  }

  void verify_schedule(Report& r, const Graph& g, const ProbeSchedule& s) const {
    const ScheduleTrace t = run_schedule(g, s);
    r.results["budget"] = s.cops;
    r.results["rounds"] = s.length();
    r.results["cleared"] = t.cleared;
    if (t.cleared) r.results["cleared_round"] = *t.cleared_round;
    for (const auto& [k, v] : s.notes) r.results["meta"][k] = v;
    if (!o_.emit_path.empty()) write_file(o_.emit_path, schedule_to_json(s, &g));
    r.text << "budget " << s.cops << ", " << s.length() << " rounds: ";
    if (t.cleared) {
      r.text << "cleared in round " << *t.cleared_round << "\n";
    } else {
      r.text << "NOT cleared (" << t.final_state().count() << " contaminated)\n";
      r.exit_code = kNegative;
    }
  }

  void strat(Report& r) const {
    const std::string& name = o_.strategy;
    r.params = {{"strategy", name}, {"n", o_.n}, {"root", o_.root}};
    if (name == "grid-sweep") {
      long n = o_.n;
      if (n == 0) {
        const Graph g = load(r);
        const auto side = as_square_grid(g);
        if (!side) throw PreconditionError("grid-sweep needs --n or a square grid");
        n = static_cast<long>(*side);
      }
      try {
        const GridStrategy gs = grid_strategy(n);
        const Graph g = grid_graph(static_cast<std::size_t>(n), Caps::kMaxVertices);
        r.graph_id = "grid" + std::to_string(n);
        r.graph_hash = graph_hash(g);
        r.results["m"] = gs.m;
        r.text << "grid " << n << ", m=" << gs.m << ": ";
        verify_schedule(r, g, gs.schedule);
      } catch (const VerificationError& e) {
        r.text << "NOT cleared: " << e.what() << "\n";
        r.exit_code = kNegative;
      }
      return;
    }
    const Graph g = load(r);
    if (name == "tree-depth") {
      const Vertex root = root_or(g, tree_depth(g).root);
      const ProbeSchedule s = strat_tree_depth(g, root);
      r.text << "root " << root + 1 << ", depth " << root_tree(g, root).height << ": ";
      verify_schedule(r, g, s);
    } else if (name == "tree-levels") {
      const Vertex root = root_or(g, midway_vertex(g));
      const ProbeSchedule s = strat_tree_levels(g, root);
      r.text << "root " << root + 1 << ", max non-leaf level " << level_decomposition(g, root).max_nonleaf() << ": ";
      verify_schedule(r, g, s);
    } else if (name == "separator") {
      const SeparatorSchedule s = strat_separator(g, caps_);
      r.results["separator_factor"] = s.separator_factor;
      r.results["budget_bound"] = s.budget_bound;
      verify_schedule(r, g, s.schedule);
      if (static_cast<double>(s.schedule.cops) > s.budget_bound) {
        r.text << "budget exceeds the recursion bound " << s.budget_bound << "\n";
        r.exit_code = kNegative;
      }
    } else {
      const auto policy = make_policy(name, g, r);
      if (!o_.emit_path.empty()) {
        if (const auto* sp = dynamic_cast<const SchedulePolicy*>(policy.get())) {
          write_file(o_.emit_path, schedule_to_json(sp->schedule(), &g));
        } else {
          const json desc = {{"policy", policy->name()},
                             {"budget", policy->budget()},
                             {"graph", o_.graph},
                             {"graph_hash", hex(graph_hash(g))},
                             {"root", o_.root}};
          write_file(o_.emit_path, desc.dump(2) + "\n");
        }
      }
      if (name == "grid-endgame" && !o_.simulate) {
        r.results["budget"] = policy->budget();
        r.text << "policy " << policy->name() << ", budget " << policy->budget() << ": not simulated\n";
        return;
      }
      simulate(r, g, *policy);
    }
  }

  void table(Report& r) const {
    if (o_.table != "tab1") throw ValidationError("unknown table '" + o_.table + "' (known: tab1)");
    const auto rows = table_tab1();
    r.text << format_tab1(rows);
    json rows_json = json::array();
    bool ok = true;
    for (const auto& row : rows) {
      rows_json.push_back({{"tree", row.name},
                           {"n", row.order},
                           {"depth", row.depth},
                           {"computed", row.computed},
                           {"expected", row.expected},
                           {"match", row.matches()}});
      ok = ok && row.matches();
    }
    r.results["rows"] = std::move(rows_json);
    if (!ok) r.exit_code = kNegative;
  }

 private:
  const Options& o_;
  const Caps& caps_;
};

json render(const Report& r, const Caps& caps) {
  json j;
  j["command"] = r.command;
  j["graph"] = r.graph_id;
  j["graph_hash"] = r.graph_hash ? json(hex(*r.graph_hash)) : json(nullptr);
  j["params"] = r.params;
  j["caps"] = caps.describe();
  j["version"] = LZL_VERSION_STRING;
  j["results"] = r.results;
  j["notes"] = r.notes;
  j["exit"] = r.exit_code;
  return j;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"lzl: one-visibility localization and one-proximity game engine"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json_out, "Print the JSON run report instead of text");
  app.add_flag("--timing", o.timing, "Report wall time");
  app.add_flag("--no-cache", o.no_cache, "Ignore $LZL_CACHE");

  auto* gen = app.add_subcommand("gen", "Generate a graph file");
  gen->add_option("--family", o.family, "path, cycle, complete, star, grid, kary, spider, subdivide")->required();
  gen->add_option("--n", o.n);
  gen->add_option("--k", o.k);
  gen->add_option("--d", o.d);
  gen->add_option("--i", o.i, "Subdivisions per edge");
  gen->add_option("--arms", o.arms, "Spider arm lengths, e.g. 3,3,3");
  gen->add_option("--base", o.base, "Base family for subdivide");
  gen->add_option("-o,--out", o.out_path);

  auto* iso = app.add_subcommand("iso", "Isoperimetric profile");
  iso->add_option("--graph", o.graph)->required();
  iso->add_option("--mode", o.mode, "vertex or edge");
  iso->add_flag("--h-index", o.h_index);
  iso->add_option("--budget", o.budget, "Subset budget, 0 = unlimited");
  iso->add_option("-o,--out", o.out_path, "Write the CSV here");

  auto* bounds = app.add_subcommand("bounds", "Assemble lower and upper bounds");
  bounds->add_option("--graph", o.graph)->required();

  auto* prox = app.add_subcommand("prox", "One-proximity game");
  prox->require_subcommand(1);
  auto* prox_solve_cmd = prox->add_subcommand("solve", "Exact prox number with a witness schedule");
  prox_solve_cmd->add_option("--graph", o.graph)->required();
  prox_solve_cmd->add_option("--emit", o.emit_path, "Write the witness schedule JSON");
  auto* prox_verify = prox->add_subcommand("verify", "Replay a schedule under the contamination dynamics");
  prox_verify->add_option("--graph", o.graph)->required();
  prox_verify->add_option("--schedule", o.schedule_path)->required();
  prox_verify->add_option("--trace", o.trace_path, "Write the trace JSON");

  auto* zeta = app.add_subcommand("zeta", "One-visibility localization game");
  zeta->require_subcommand(1);
  auto* zeta_solve_cmd = zeta->add_subcommand("solve", "Exact zeta number");
  zeta_solve_cmd->add_option("--graph", o.graph)->required();
  auto* zeta_sim = zeta->add_subcommand("simulate", "Run a policy against an omniscient robber");
  zeta_sim->add_option("--graph", o.graph)->required();
  zeta_sim->add_option("--policy", o.policy)->required();
  zeta_sim->add_option("--order", o.order, "Probe order for the sweep policy, 1-based");
  zeta_sim->add_option("--root", o.root, "Root for lift-tree, 1-based");
  zeta_sim->add_option("--schedule", o.schedule_path, "Prox schedule for the lift policies");
  zeta_sim->add_option("--round-cap", o.round_cap);

  auto* strat = app.add_subcommand("strat", "Build and verify a cop strategy");
  strat->add_option("name", o.strategy,
                    "grid-sweep, tree-depth, tree-levels, separator, tree-log, pathwidth, domination, lift-delta, "
                    "lift-tpb, lift-tree, grid-endgame")
      ->required();
  strat->add_option("--graph", o.graph);
  strat->add_option("--n", o.n, "Grid side for grid-sweep");
  strat->add_option("--root", o.root, "1-based root for tree strategies");
  strat->add_option("--schedule", o.schedule_path, "Prox schedule for the lift strategies");
  strat->add_option("--emit", o.emit_path, "Write the schedule or policy descriptor");
  strat->add_flag("--simulate", o.simulate, "Simulate grid-endgame as well");
  strat->add_option("--round-cap", o.round_cap);

  auto* table = app.add_subcommand("table", "Reproduce a results table");
  table->add_option("name", o.table, "tab1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Caps caps;
  try {
    caps = Caps::from_environment();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Report report;
  Runner runner(o, caps);
  std::function<void(Report&)> action;
  bool cacheable = false;
  if (gen->parsed()) {
    report.command = "gen";
    action = [&](Report& r) { runner.gen(r); };
  } else if (iso->parsed()) {
    report.command = "iso";
    action = [&](Report& r) { runner.iso(r); };
    cacheable = true;
  } else if (bounds->parsed()) {
    report.command = "bounds";
    action = [&](Report& r) { runner.bounds(r); };
    cacheable = true;
  } else if (prox_solve_cmd->parsed()) {
    report.command = "prox solve";
    action = [&](Report& r) { runner.prox_solve_cmd(r); };
    cacheable = o.emit_path.empty();
  } else if (prox_verify->parsed()) {
    report.command = "prox verify";
    action = [&](Report& r) { runner.prox_verify(r); };
  } else if (zeta_solve_cmd->parsed()) {
    report.command = "zeta solve";
    action = [&](Report& r) { runner.zeta_solve_cmd(r); };
    cacheable = true;
  } else if (zeta_sim->parsed()) {
    report.command = "zeta simulate";
    action = [&](Report& r) { runner.zeta_simulate(r); };
  } else if (strat->parsed()) {
    report.command = "strat " + o.strategy;
    action = [&](Report& r) { runner.strat(r); };
  } else {
    report.command = "table " + o.table;
    action = [&](Report& r) { runner.table(r); };
  }

  const auto start = std::chrono::steady_clock::now();
  std::string text;
  std::string json_text;
  int code = kOk;
  try {
    const ResultCache cache = o.no_cache ? ResultCache("") : ResultCache::from_environment();
    std::string key;
    std::optional<CachedResult> hit;
    if (cacheable && cache.enabled()) {
      const Graph g = resolve_graph(o.graph, cli_vertex_cap(caps));
      key = report.command + "|" + hex(graph_hash(g)) + "|mode=" + o.mode + ",budget=" + std::to_string(o.budget) +
            ",h=" + std::to_string(o.h_index) + "|" + LZL_VERSION_STRING + "|" + caps.describe();
      hit = cache.lookup(key);
    }
    if (hit) {
      text = hit->text;
      json_text = hit->json;
      code = hit->exit_code;
    } else {
      action(report);
      text = report.text.str();
      json_text = render(report, caps).dump(2);
      code = report.exit_code;
      if (!key.empty()) cache.store(key, {code, text, json_text});
    }
  } catch (const SizeError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << "\n";
    return kUsage;
  }

  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.json_out) {
    json j = json::parse(json_text);
    if (o.timing) j["timing_ms"] = ms;
    out << j.dump(2) << "\n";
  } else {
    out << text;
    if (o.timing) err << "wall time: " << ms << " ms\n";
  }
  return code;
}

}  // namespace lzl::cli
