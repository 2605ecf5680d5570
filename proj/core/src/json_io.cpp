#include "lzl/json_io.hpp"

#include <json.hpp>

#include "lzl/errors.hpp"

namespace lzl {

using json = nlohmann::ordered_json;

namespace {

json ids(const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

std::string mode_name(GameMode m) { return m == GameMode::prox ? "prox" : "zeta"; }

}  // namespace

std::string schedule_to_json(const ProbeSchedule& s, const Graph* g) {
  json j;
  j["mode"] = mode_name(s.mode);
  j["cops"] = s.cops;
  j["rounds"] = json::array();
  for (const auto& r : s.rounds) j["rounds"].push_back(ids(r));
  if (g != nullptr && as_square_grid(*g)) {
    json coords = json::array();
    for (const auto& r : s.rounds) {
      json round = json::array();
      for (Vertex v : r) round.push_back({*g->int_label(v, "row"), *g->int_label(v, "col")});
      coords.push_back(std::move(round));
    }
    j["coords"] = std::move(coords);
  }
  if (!s.notes.empty()) {
    json meta = json::object();
    for (const auto& [k, v] : s.notes) meta[k] = v;
    j["meta"] = std::move(meta);
  }
  return j.dump(2) + "\n";
}

ProbeSchedule schedule_from_json(const std::string& text, const Graph& g) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("schedule JSON: ") + e.what());
  }
  try {
    ProbeSchedule s;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "prox") {
      s.mode = GameMode::prox;
    } else if (mode == "zeta") {
      s.mode = GameMode::zeta;
    } else {
      throw ValidationError("schedule JSON: unknown mode '" + mode + "'");
    }
    s.cops = j.at("cops").get<std::size_t>();
    for (const auto& round : j.at("rounds")) {
      VertexSet r(g.order());
      for (const auto& id : round) {
        const auto v = id.get<long>();
        if (v < 1 || static_cast<std::size_t>(v) > g.order()) {
          throw ValidationError("schedule JSON: vertex " + std::to_string(v) + " out of range");
        }
        r.insert(static_cast<Vertex>(v - 1));
      }
      s.rounds.push_back(std::move(r));
    }
    if (j.contains("meta")) {
      for (const auto& [k, v] : j["meta"].items()) s.note(k, v.is_string() ? v.get<std::string>() : v.dump());
    }
    s.validate(g);
    return s;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("schedule JSON: ") + e.what());
  }
}

std::string trace_to_json(const ScheduleTrace& trace) {
  json j;
  j["cleared"] = trace.cleared;
  j["cleared_round"] = trace.cleared_round ? json(*trace.cleared_round) : json(nullptr);
  j["rounds_run"] = trace.rounds_run();
  j["first_recontamination"] = trace.first_recontamination ? json(*trace.first_recontamination) : json(nullptr);
  j["max_contamination"] = trace.max_contamination;
  j["contaminated_counts"] = trace.contaminated_counts;
  j["final_state"] = ids(trace.final_state());
  return j.dump(2) + "\n";
}

std::string simulation_to_json(const SimulationResult& result, const Policy& policy) {
  json j;
  j["policy"] = policy.name();
  j["budget"] = policy.budget();
  j["outcome"] = to_string(result.outcome);
  j["worst_round"] = result.worst_round;
  j["positions"] = result.positions;
  json w = json::array();
  for (const auto& step : result.witness) {
    w.push_back({{"round", step.round},
                 {"probes", ids(step.probes)},
                 {"observation", step.observation},
                 {"posterior", ids(step.posterior)}});
  }
  j["witness"] = std::move(w);
  return j.dump(2) + "\n";
}

std::string bounds_to_json(const BoundsReport& r) {
  json j;
  j["graph"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["max_degree"] = r.max_degree;
  j["tree"] = r.tree;
  j["c4_free"] = r.c4_free;
  json q = json::object();
  const auto put = [&](const char* key, const std::optional<std::size_t>& v) {
    if (v) q[key] = *v;
  };
  put("prox", r.quantities.prox);
  put("zeta", r.quantities.zeta);
  put("H_V", r.quantities.hv);
  put("H_E", r.quantities.he);
  put("peak_V", r.quantities.peak_v);
  put("peak_E", r.quantities.peak_e);
  put("pathwidth", r.quantities.pathwidth);
  put("domination", r.quantities.domination);
  j["quantities"] = std::move(q);
  json bounds = json::array();
  for (const auto& b : r.bounds) {
    bounds.push_back({{"target", to_string(b.target)}, {"kind", to_string(b.kind)}, {"value", b.value}, {"rule", b.rule}});
  }
  j["bounds"] = std::move(bounds);
  for (Target t : {Target::prox, Target::zeta}) {
    const Interval iv = r.interval(t);
    j["interval"][to_string(t)] = {iv.lower, iv.upper ? json(*iv.upper) : json(nullptr)};
  }
  if (r.grid_window) j["grid_window"] = {r.grid_window->lower, *r.grid_window->upper};
  j["symbolic"] = r.symbolic;
  j["diagnostics"] = r.diagnostics;
  return j.dump(2) + "\n";
}

}  // namespace lzl
