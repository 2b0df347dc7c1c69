#pragma once

// JSON forms of groups, quandles, invariant profiles and verdicts (nlohmann::json).

#include <json.hpp>

#include <string>
#include <vector>

#include "quandle/iso.hpp"

namespace qf {

using json = nlohmann::ordered_json;

inline json to_json(const FiniteGroup& g) {
  json table = json::array();
  for (Elem a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (Elem b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  return {{"name", g.name()}, {"order", g.order()}, {"table", std::move(table)}};
}

/// Accepts {"name", "order", "table"}; the table is validated as a group.
inline FiniteGroup group_from_json(const json& j) {
  try {
    const std::string name = j.at("name").get<std::string>();
    const std::size_t n = j.at("order").get<std::size_t>();
    const json& rows = j.at("table");
    if (!rows.is_array() || rows.size() != n) throw StructuralError("table must have " + std::to_string(n) + " rows");
    std::vector<Elem> table;
    table.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw StructuralError("every table row must have " + std::to_string(n) + " entries");
      for (const auto& v : row) table.push_back(v.get<Elem>());
    }
    return FiniteGroup(name, n, std::move(table));
  } catch (const json::exception& e) {
    throw StructuralError(std::string("malformed group JSON: ") + e.what());
  }
}

inline json to_json(const Quandle& q) {
  json sym = json::array();
  for (Elem x = 0; x < q.size(); ++x) sym.push_back(q.row(x));
  json out = {{"size", q.size()}, {"sym", std::move(sym)}};
  if (q.provenance())
    out["provenance"] = {{"group", q.provenance()->group.name()}, {"automorphism", q.provenance()->automorphism}};
  else
    out["provenance"] = nullptr;
  return out;
}

/// Accepts {"size", "sym", "provenance"?}; a provenance group is resolved through the catalog.
inline Quandle quandle_from_json(const json& j) {
  try {
    const std::size_t n = j.at("size").get<std::size_t>();
    const json& rows = j.at("sym");
    if (!rows.is_array() || rows.size() != n) throw StructuralError("sym must have " + std::to_string(n) + " rows");
    std::vector<Elem> sym;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw StructuralError("every sym row must have " + std::to_string(n) + " entries");
      for (const auto& v : row) sym.push_back(v.get<Elem>());
    }
    std::optional<Provenance> prov;
    if (j.contains("provenance") && !j["provenance"].is_null()) {
      const auto& p = j["provenance"];
      prov = Provenance{build_group(p.at("group").get<std::string>()), p.at("automorphism").get<std::vector<Elem>>()};
      const Quandle expected = general_alexander(GroupMap(prov->group, prov->group, prov->automorphism));
      if (expected.sym() != sym) throw StructuralError("sym does not match its provenance");
    }
    return Quandle(n, std::move(sym), std::move(prov));
  } catch (const json::exception& e) {
    throw StructuralError(std::string("malformed quandle JSON: ") + e.what());
  }
}

inline json to_json(const GroupDescriptor& d) {
  return {{"display", d.display()}, {"order", d.order}, {"abelian", d.abelian}, {"element_orders", d.element_orders}};
}

inline json to_json(const RestrictedClass& c) {
  json out = {{"display", c.display}, {"order", c.order}, {"fixed", c.fixed}};
  out["class_id"] = c.class_id ? json(*c.class_id) : json(nullptr);
  return out;
}

/// Schema "profile.v1": one key per profile field, in field order.
inline json to_json(const InvariantProfile& p) {
  return {{"schema", "profile.v1"},
          {"group_order", p.group_order},
          {"psi_order", p.psi_order},
          {"fix_size", p.fix_size},
          {"p_iso_type", to_json(p.p_iso_type)},
          {"p2_iso_type", to_json(p.p2_iso_type)},
          {"psi_restricted_class", to_json(p.psi_restricted_class)},
          {"p_cap_fix", p.p_cap_fix},
          {"tn_size", p.tn_size},
          {"p1", p.p1},
          {"p2_flag", p.p2_flag},
          {"inn_size", p.inn_size}};
}

inline json to_json(const IsoVerdict& v) {
  json out = {{"result", to_string(v.result)}, {"method", to_string(v.method)}};
  if (v.witness) out["witness"] = *v.witness;
  if (v.separator) out["separator"] = *v.separator;
  if (!v.note.empty()) out["note"] = v.note;
  if (!v.agreeing.empty()) {
    json a = json::array();
    for (IsoMethod m : v.agreeing) a.push_back(to_string(m));
    out["agreeing"] = std::move(a);
  }
  return out;
}

inline IsoResult iso_result_from_string(const std::string& s) {
  for (IsoResult r : {IsoResult::Isomorphic, IsoResult::NotIsomorphic, IsoResult::Undecided})
    if (s == to_string(r)) return r;
  throw StructuralError("unknown verdict result '" + s + "'");
}

inline IsoMethod iso_method_from_string(const std::string& s) {
  for (IsoMethod m : {IsoMethod::BruteForce, IsoMethod::Theorem13, IsoMethod::InvariantSeparation,
                      IsoMethod::SimpleGroupConjugacy, IsoMethod::DihedralFormula, IsoMethod::CyclicFormula,
                      IsoMethod::AbelianNelson})
    if (s == to_string(m)) return m;
  throw StructuralError("unknown method '" + s + "'");
}

inline IsoVerdict verdict_from_json(const json& j) {
  try {
    IsoVerdict v;
    v.result = iso_result_from_string(j.at("result").get<std::string>());
    v.method = iso_method_from_string(j.at("method").get<std::string>());
    if (j.contains("witness")) v.witness = j["witness"].get<std::vector<Elem>>();
    if (j.contains("separator")) v.separator = j["separator"].get<std::string>();
    if (j.contains("note")) v.note = j["note"].get<std::string>();
    if (j.contains("agreeing"))
      for (const auto& m : j["agreeing"]) v.agreeing.push_back(iso_method_from_string(m.get<std::string>()));
    return v;
  } catch (const json::exception& e) {
    throw StructuralError(std::string("malformed verdict JSON: ") + e.what());
  }
}

}  // namespace qf
