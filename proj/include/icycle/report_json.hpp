#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "icycle/constructions.hpp"
#include "icycle/cycles.hpp"
#include "icycle/graph6.hpp"
#include "icycle/search.hpp"
#include "icycle/structure.hpp"

// JSON forms of the report types. Field order is fixed.

namespace icycle {

using Json = nlohmann::ordered_json;

inline Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

inline Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(to_json(e));
  return out;
}

inline Json to_json(const CycleCountReport& r) {
  Json per_edge = Json::array();
  for (const auto& ec : r.per_edge) per_edge.push_back(Json::array({ec.edge.u, ec.edge.v, ec.count}));
  return Json{{"k", r.k}, {"total", r.total}, {"per_vertex", r.per_vertex}, {"per_edge", per_edge}};
}

inline Json to_json(const FormulaTable& t) { return Json{{"n", t.n}, {"h0", t.h0}, {"h1", t.h1}, {"fi", t.fi}}; }

inline Json to_json(const FamilyReport& r) {
  Json out{{"member", r.member}};
  if (r.member) {
    out["hubs"] = r.hubs;
    out["classes"] = Json{{"A", r.classes[0]}, {"B", r.classes[1]}, {"C", r.classes[2]}};
    out["intra_edges"] = to_json(r.intra_edges);
  } else {
    out["reason"] = r.reason;
  }
  return out;
}

inline Json to_json(const XDecomposition& d) {
  return Json{{"path", {d.u, d.v, d.w}}, {"X", to_json(d.x)},   {"X1", to_json(d.x1)},      {"X2", to_json(d.x2)},
              {"X3", to_json(d.x3)},     {"G1", to_json(d.g1)}, {"G2", to_json(d.g2)}, {"cycles", d.cycles}};
}

inline Json to_json(const EmptyK27Witness& w) {
  return Json{{"u", w.u}, {"w", w.w}, {"fan", w.fan}, {"central", w.central}};
}

inline Json to_json(const GoodSixCycle& c) { return Json{{"hubs", c.hubs}, {"spokes", c.spokes}}; }

inline Json to_json(const HubCycleWitness& h) {
  return Json{{"k", h.k}, {"hubs", h.hubs}, {"min_common", h.min_common}};
}

inline Json to_json(const SearchReport& r) {
  Json out{{"n", r.n},
           {"complete", r.complete},
           {"graphs_examined", r.graphs_examined},
           {"nonplanar_skipped", r.nonplanar_skipped},
           {"empirical_max", r.empirical_max},
           {"argmax", r.argmax}};
  out["formula_value"] = r.formula_value ? Json(*r.formula_value) : Json(nullptr);
  out["equality"] = r.equality;
  out["argmax_in_family"] = r.argmax_in_family;
  return out;
}

inline Json to_json(const PropertyViolation& v) {
  return Json{{"property", v.property}, {"graph6", v.graph6}, {"details", v.details}};
}

/// Sidecar describing a generated construction's layout.
inline Json to_json(const Construction& c) {
  Json out{{"n", c.graph.order()}, {"m", c.base_length}, {"graph6", graph6_encode(c.graph)}, {"hubs", c.hubs}};
  out["classes"] = c.classes;
  return out;
}

}  // namespace icycle
