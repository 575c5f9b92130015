#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "graycube/gray.hpp"
#include "graycube/poset.hpp"
#include "graycube/retract.hpp"
#include "graycube/total_order.hpp"
#include "graycube/twocat.hpp"

namespace graycube {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON layouts.
//   poset    {"elements": [...], "leq": [[x, y], ...]}   (full, reflexive)
//   category {"objects": [...], "homs": {"x|y": poset, ...},
//             "identities": {"x": elt, ...},
//             "compose": {"x|y|z": [[f, g, fg], ...], ...}}   (optional)
//   functor  {"objects": {"x": "Fx", ...}, "homs": {"x|y": {f: "Ff", ...}}}
//   cell     {"dim": d, "src": "...", "dst": "...", "order": [a, ...]}
// Keys join object names with '|'; object names never contain it.
// ---------------------------------------------------------------------------

inline json poset_to_json(const FinitePoset& p) {
  json out;
  out["elements"] = p.elements();
  json rel = json::array();
  for (const auto& [x, y] : p.relation_pairs()) rel.push_back(json::array({x, y}));
  out["leq"] = std::move(rel);
  return out;
}

inline FinitePoset poset_from_json(const json& j) {
  std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const json& entry : j.at("leq")) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("leq entries must be pairs");
    pairs.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
  }
  return FinitePoset::from_pairs(std::move(elements), pairs);
}

namespace detail {
inline std::string hom_key(const Obj& x, const Obj& y) { return x + "|" + y; }

inline std::pair<Obj, Obj> parse_hom_key(const std::string& key) {
  const auto parts = split(key, '|');
  if (parts.size() != 2)
    throw std::invalid_argument("hom key " + key + " is not of the form x|y");
  return {parts[0], parts[1]};
}
}  // namespace detail

/// Serializes a category by materializing it; empty homs are omitted.
/// Only sensible for small instances.
inline json category_to_json(const TwoCategory& c, bool include_compose = true) {
  const TwoCategory::Tables t = materialize(c, include_compose);
  json out;
  out["objects"] = t.objects;
  json homs = json::object();
  for (const auto& [key, poset] : t.homs)
    if (!poset.is_empty())
      homs[detail::hom_key(key.first, key.second)] = poset_to_json(poset);
  out["homs"] = std::move(homs);
  json ids = json::object();
  for (const auto& [x, e] : t.identities) ids[x] = e;
  out["identities"] = std::move(ids);
  if (include_compose) {
    json comp = json::object();
    for (const auto& [key, table] : t.compose) {
      json rows = json::array();
      for (const auto& [pair, result] : table)
        rows.push_back(json::array({pair.first, pair.second, result}));
      comp[std::get<0>(key) + "|" + std::get<1>(key) + "|" + std::get<2>(key)] =
          std::move(rows);
    }
    out["compose"] = std::move(comp);
  }
  return out;
}

/// Reads a table-backed category. A missing "compose" object yields a
/// category whose composition refuses to answer, which is enough for
/// inspecting homs.
inline TwoCategory category_from_json(const json& j) {
  TwoCategory::Tables t;
  t.objects = j.at("objects").get<std::vector<Obj>>();
  for (const auto& [key, value] : j.at("homs").items()) {
    const auto [x, y] = detail::parse_hom_key(key);
    t.homs[{x, y}] = poset_from_json(value);
  }
  for (const auto& [x, e] : j.at("identities").items())
    t.identities[x] = e.get<Elt>();
  if (j.contains("compose")) {
    for (const auto& [key, rows] : j.at("compose").items()) {
      const auto parts = split(key, '|');
      if (parts.size() != 3)
        throw std::invalid_argument("compose key " + key +
                                    " is not of the form x|y|z");
      auto& table = t.compose[{parts[0], parts[1], parts[2]}];
      for (const json& row : rows) {
        if (!row.is_array() || row.size() != 3)
          throw std::invalid_argument("compose entries must be triples");
        table[{row[0].get<Elt>(), row[1].get<Elt>()}] = row[2].get<Elt>();
      }
    }
  }
  return TwoCategory::from_tables(std::move(t));
}

inline json functor_to_json(const TwoFunctor& f) {
  json out;
  json objects = json::object();
  for (const auto& [x, fx] : f.object_map) objects[x] = fx;
  out["objects"] = std::move(objects);
  json homs = json::object();
  for (const auto& [key, assign] : f.hom_maps) {
    if (assign.empty()) continue;
    json entry = json::object();
    for (const auto& [e, fe] : assign) entry[e] = fe;
    homs[detail::hom_key(key.first, key.second)] = std::move(entry);
  }
  out["homs"] = std::move(homs);
  return out;
}

/// The endpoints are not part of the JSON, so the caller supplies them.
inline TwoFunctor functor_from_json(const json& j, TwoCategory source,
                                    TwoCategory target) {
  TwoFunctor f;
  f.source = std::move(source);
  f.target = std::move(target);
  for (const auto& [x, fx] : j.at("objects").items())
    f.object_map[x] = fx.get<Obj>();
  for (const auto& [key, assign] : j.at("homs").items()) {
    const auto [x, y] = detail::parse_hom_key(key);
    auto& entry = f.hom_maps[{x, y}];
    for (const auto& [e, fe] : assign.items()) entry[e] = fe.get<Elt>();
  }
  return f;
}

inline json cell_to_json(int dim, const OneCell& cell) {
  json out;
  out["dim"] = dim;
  out["src"] = cell.src;
  out["dst"] = cell.dst;
  out["order"] = TotalOrder::from_string(cell.cell).sequence;
  return out;
}

inline std::pair<int, OneCell> cell_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  OneCell cell;
  cell.src = j.at("src").get<Obj>();
  cell.dst = j.at("dst").get<Obj>();
  TotalOrder t;
  t.sequence = j.at("order").get<std::vector<int>>();
  const auto bad = t.check();
  if (!bad.empty())
    throw std::invalid_argument("malformed cell order: " + bad.front());
  cell.cell = t.to_string();
  return {dim, cell};
}

// --- report serialization, for the json output format of the tool -------

inline json report_to_json(const Report& r) {
  json out;
  out["ok"] = r.ok();
  json v = json::array();
  for (const auto& violation : r.violations)
    v.push_back({{"kind", violation.kind}, {"detail", violation.detail}});
  out["violations"] = std::move(v);
  return out;
}

inline json retract_report_to_json(const RetractReport& r) {
  json out;
  out["shape"] = r.shape.to_string();
  out["dim"] = r.d;
  out["ok"] = r.ok();
  out["section_ok"] = r.section_ok;
  out["retraction_ok"] = r.retraction_ok;
  out["composite_identity"] = r.composite_identity;
  out["idempotent_ok"] = r.idempotent_ok;
  json v = json::array();
  for (const auto& w : r.witnesses)
    v.push_back({{"kind", w.kind}, {"detail", w.detail}});
  out["witnesses"] = std::move(v);
  out["section_functor"] = functor_to_json(r.section_functor);
  out["retraction_functor"] = functor_to_json(r.retraction_functor);
  return out;
}

inline json gray_report_to_json(const GrayReport& r) {
  json out;
  out["m"] = r.m;
  out["n"] = r.n;
  out["ok"] = r.ok();
  json checks = json::object();
  for (const auto& check : r.checks) checks[check.name] = report_to_json(check.report);
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace graycube
