#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "closedgraph/closed.hpp"
#include "closedgraph/graph.hpp"
#include "closedgraph/labeling.hpp"
#include "closedgraph/oracle.hpp"
#include "closedgraph/structure.hpp"
#include "json.hpp"

namespace closedgraph {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

struct ComponentNarrowness {
  std::vector<Vertex> vertices;
  std::optional<NarrowWitness> witness;  // whole-graph indices
};

/// Everything `check` reports about one graph.
struct CheckReport {
  int vertices = 0;
  std::size_t edges = 0;
  bool connected = false;
  Verdict<HoleWitness> chordal;
  Verdict<ClawWitness> claw_free;
  std::vector<ComponentNarrowness> narrow;
  Verdict<HoleWitness> weak_456;
  bool closed = false;
  Labeling labeling;  // algorithm labeling, composed over components
  std::optional<ClosedViolation> violation;

  bool all_narrow() const {
    for (const auto& c : narrow)
      if (c.witness) return false;
    return true;
  }

  /// closed must equal chordal and claw-free and every component narrow.
  bool consistent() const { return closed == (chordal.holds() && claw_free.holds() && all_narrow()); }
};

inline CheckReport build_check_report(const Graph& g) {
  CheckReport r;
  r.vertices = g.order();
  r.edges = g.edge_count();
  r.connected = is_connected(g);
  r.chordal = is_chordal(g);
  r.claw_free = is_claw_free(g);
  r.weak_456 = has_chordal_456(g);

  const ComponentLabeling run = label_by_components(g);
  for (std::size_t c = 0; c < run.components.size(); ++c) {
    ComponentNarrowness entry{run.components[c], std::nullopt};
    auto verdict = is_narrow(run.subgraphs[c]);
    if (!verdict) {
      NarrowWitness w = verdict.witness();
      const auto& map = run.components[c];
      w.vertex = map[w.vertex];
      w.from = map[w.from];
      w.to = map[w.to];
      for (Vertex& v : w.path) v = map[v];
      entry.witness = std::move(w);
    }
    r.narrow.push_back(std::move(entry));
  }

  r.labeling = run.labeling;
  auto verdict = is_closed_by_definition(g, r.labeling);
  r.closed = verdict.holds();
  if (!r.closed) r.violation = verdict.witness();
  return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline Json names_of(const Graph& g, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

}  // namespace detail

inline Json to_json(const Graph& g, const Labeling& lab) {
  Json out = Json::object();
  for (Vertex v = 0; v < g.order(); ++v) out[g.name(v)] = lab.label(v);
  return out;
}

inline Json to_json(const Graph& g, const Labeling& lab, const ClosedViolation& v) {
  Json out;
  out["kind"] = to_string(v.kind);
  auto names = [&](const auto& labels) {
    Json a = Json::array();
    for (int x : labels) a.push_back(g.name(lab.vertex(x)));
    return a;
  };
  switch (v.kind) {
    case ClosedViolation::Kind::fork:
      out["triple"] = v.triple;
      out["vertices"] = names(v.triple);
      break;
    case ClosedViolation::Kind::interval_gap:
      out["label"] = v.label;
      out["missing"] = v.missing;
      break;
    case ClosedViolation::Kind::non_directed_path:
      out["path"] = v.path;
      out["vertices"] = names(v.path);
      break;
  }
  return out;
}

inline Json to_json(const Graph& g, const CheckReport& r) {
  Json out;
  out["schema"] = kReportSchema;
  out["command"] = "check";
  out["vertices"] = r.vertices;
  out["edges"] = r.edges;
  out["connected"] = r.connected;
  out["components"] = r.narrow.size();

  Json chordal{{"holds", r.chordal.holds()}};
  if (!r.chordal) chordal["hole"] = detail::names_of(g, r.chordal.witness().cycle);
  out["chordal"] = std::move(chordal);

  Json claw{{"holds", r.claw_free.holds()}};
  if (!r.claw_free) {
    const auto& w = r.claw_free.witness();
    claw["claw"] = {{"center", g.name(w.center)},
                    {"leaves", detail::names_of(g, {w.leaves.begin(), w.leaves.end()})}};
  }
  out["claw_free"] = std::move(claw);

  Json narrow{{"holds", r.all_narrow()}, {"components", Json::array()}};
  for (const auto& c : r.narrow) {
    Json entry{{"vertices", detail::names_of(g, c.vertices)}, {"holds", !c.witness}};
    if (c.witness)
      entry["witness"] = {{"vertex", g.name(c.witness->vertex)},
                          {"path", detail::names_of(g, c.witness->path)},
                          {"endpoints", {g.name(c.witness->from), g.name(c.witness->to)}}};
    narrow["components"].push_back(std::move(entry));
  }
  out["narrow"] = std::move(narrow);

  Json weak{{"holds", r.weak_456.holds()}};
  if (!r.weak_456) weak["hole"] = detail::names_of(g, r.weak_456.witness().cycle);
  out["weak_456_chordal"] = std::move(weak);

  Json closed{{"holds", r.closed}};
  if (r.closed)
    closed["labeling"] = to_json(g, r.labeling);
  else
    closed["violation"] = to_json(g, r.labeling, *r.violation);
  out["closed"] = std::move(closed);
  return out;
}

inline Json to_json(const ComponentLabeling& run, const Graph& g) {
  Json comps = Json::array();
  for (std::size_t c = 0; c < run.components.size(); ++c) {
    const Graph& sub = run.subgraphs[c];
    const LabelingRun& r = run.runs[c];
    Json layers_json = Json::array();
    for (const auto& layer : layers(sub, r.labeling).layers) {
      Json names = Json::array();
      for (Vertex v : layer) names.push_back(sub.name(v));
      layers_json.push_back(std::move(names));
    }
    comps.push_back({{"vertices", detail::names_of(g, run.components[c])},
                     {"labels", to_json(sub, r.labeling)},
                     {"l", r.l.values},
                     {"layers", std::move(layers_json)}});
  }
  return comps;
}

inline Json to_json(const SweepReport& r) {
  Json out;
  out["schema"] = kReportSchema;
  out["command"] = "sweep";
  out["max_n"] = r.max_n;
  out["weak_chordal"] = r.weak_chordal;
  out["tie_trials"] = r.tie_trials;
  out["graphs_examined"] = r.graphs_examined;
  Json by_order = Json::object();
  for (const auto& [n, c] : r.examined_by_order) by_order[std::to_string(n)] = c;
  out["examined_by_order"] = std::move(by_order);
  Json classes = Json::object();
  for (const auto& [k, c] : r.classes) classes[k] = c;
  out["classes"] = std::move(classes);
  out["labelings_certified"] = r.labelings_certified;
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) ce.push_back({{"graph6", c.graph6}, {"failure", c.failure}});
  out["counterexamples"] = std::move(ce);
  return out;
}

// ---------------------------------------------------------------------------
// Plain text

namespace detail {

inline std::string joined(const Graph& g, const std::vector<Vertex>& vs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += g.name(vs[i]);
  }
  return out;
}

}  // namespace detail

inline std::string describe(const Graph& g, const Labeling& lab, const ClosedViolation& v) {
  auto name = [&](int label) { return g.name(lab.vertex(label)) + "=" + std::to_string(label); };
  switch (v.kind) {
    case ClosedViolation::Kind::fork:
      return "fork (j,i,k) = (" + std::to_string(v.triple[0]) + "," + std::to_string(v.triple[1]) +
             "," + std::to_string(v.triple[2]) + "): " + name(v.triple[0]) + ", " +
             name(v.triple[2]) + " share neighbor " + name(v.triple[1]) + " but are not adjacent";
    case ClosedViolation::Kind::interval_gap:
      return "interval gap: upper neighborhood of " + name(v.label) + " skips label " +
             std::to_string(v.missing);
    case ClosedViolation::Kind::non_directed_path: {
      std::string out = "shortest path not directed:";
      for (int x : v.path) out += " " + std::to_string(x);
      return out;
    }
  }
  return {};
}

inline std::string to_text(const Graph& g, const CheckReport& r) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "vertices: " << r.vertices << '\n';
  out << "edges: " << r.edges << '\n';
  out << "connected: " << yes(r.connected) << " (" << r.narrow.size() << " component"
      << (r.narrow.size() == 1 ? "" : "s") << ")\n";
  out << "chordal: " << yes(r.chordal.holds());
  if (!r.chordal) out << " (chordless cycle " << detail::joined(g, r.chordal.witness().cycle, "-") << ")";
  out << '\n';
  out << "claw-free: " << yes(r.claw_free.holds());
  if (!r.claw_free) {
    const auto& w = r.claw_free.witness();
    out << " (claw centered at " << g.name(w.center) << " with leaves "
        << detail::joined(g, {w.leaves.begin(), w.leaves.end()}, ", ") << ")";
  }
  out << '\n';
  out << "narrow: " << yes(r.all_narrow());
  for (const auto& c : r.narrow) {
    if (!c.witness) continue;
    out << " (vertex " << g.name(c.witness->vertex) << " is at distance >= 2 from longest shortest path "
        << detail::joined(g, c.witness->path, "-") << ")";
  }
  out << '\n';
  out << "weak-456-chordal: " << yes(r.weak_456.holds());
  if (!r.weak_456)
    out << " (chordless cycle " << detail::joined(g, r.weak_456.witness().cycle, "-") << ")";
  out << '\n';
  out << "closed: " << yes(r.closed) << '\n';
  if (r.closed) {
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << g.name(v) << ' ' << r.labeling.label(v) << '\n';
  } else {
    out << "  algorithm labeling fails: " << describe(g, r.labeling, *r.violation) << '\n';
  }
  return out.str();
}

inline std::string to_text(const SweepReport& r) {
  std::ostringstream out;
  out << "max n: " << r.max_n << '\n';
  out << "weak chordality: " << (r.weak_chordal ? "on" : "off") << '\n';
  out << "tie trials: " << r.tie_trials << '\n';
  out << "graphs examined: " << r.graphs_examined << '\n';
  for (const auto& [n, c] : r.examined_by_order) out << "  n=" << n << ": " << c << '\n';
  out << "classes:\n";
  for (const auto& [k, c] : r.classes) out << "  " << k << ": " << c << '\n';
  out << "labelings certified: " << r.labelings_certified << '\n';
  out << "counterexamples: " << r.counterexamples.size() << '\n';
  for (const auto& c : r.counterexamples) out << "  " << c.graph6 << "  " << c.failure << '\n';
  return out.str();
}

}  // namespace closedgraph
