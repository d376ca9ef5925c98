#ifndef MAGMAKIT_JSON_IO_HPP
#define MAGMAKIT_JSON_IO_HPP

#include <map>

#include <json.hpp>

#include "magmakit/action.hpp"
#include "magmakit/split_extension.hpp"

namespace magmakit {

using nlohmann::json;  // default object type keeps keys sorted

using MagmaRegistry = std::map<std::string, Magma>;

inline json to_json(const Magma& m) {
  json rows = json::array();
  for (int i = 0; i < m.order; ++i) {
    json row = json::array();
    for (int j = 0; j < m.order; ++j) row.push_back(m.add(i, j));
    rows.push_back(std::move(row));
  }
  json out{{"order", m.order}, {"table", std::move(rows)}};
  if (!m.name.empty()) out["name"] = m.name;
  return out;
}

inline Magma magma_from_json(const json& j, const MagmaRegistry& registry = {}) {
  if (j.is_string()) {
    auto it = registry.find(j.get<std::string>());
    if (it == registry.end())
      fail("UnknownName", {}, "unknown magma name-ref: " + j.get<std::string>());
    return it->second;
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    fail("MalformedInput", {}, "magma JSON needs \"order\" and \"table\"");
  return validate_magma(j.at("order").get<int>(),
                        j.at("table").get<std::vector<std::vector<int>>>(),
                        j.value("name", std::string{}));
}

inline json to_json(const ZeroMap& m) {
  return json{{"cod", to_json(m.cod)}, {"dom", to_json(m.dom)}, {"values", m.values}};
}

inline ZeroMap zero_map_from_json(const json& j, const MagmaRegistry& registry = {}) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("values"))
    fail("MalformedInput", {}, "map JSON needs \"dom\", \"cod\", \"values\"");
  return validate_zero_map(magma_from_json(j.at("dom"), registry),
                           magma_from_json(j.at("cod"), registry),
                           j.at("values").get<std::vector<int>>());
}

inline Hom hom_from_json(const json& j, const MagmaRegistry& registry = {}) {
  return make_hom(zero_map_from_json(j, registry));
}

inline json to_json(const Action& a) {
  json rows = json::array();
  for (int i = 0; i < a.actor.order; ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < a.space.order; ++j2) row.push_back(a.act(i, j2));
    rows.push_back(std::move(row));
  }
  return json{{"B", to_json(a.actor)}, {"X", to_json(a.space)}, {"table", std::move(rows)}};
}

inline Action action_from_json(const json& j, const MagmaRegistry& registry = {}) {
  if (!j.is_object() || !j.contains("B") || !j.contains("X") || !j.contains("table"))
    fail("MalformedInput", {}, "action JSON needs \"B\", \"X\", \"table\"");
  return validate_action(magma_from_json(j.at("B"), registry),
                         magma_from_json(j.at("X"), registry),
                         j.at("table").get<std::vector<std::vector<int>>>());
}

inline json to_json(const SplitExtension& e) {
  return json{{"A", to_json(e.a)},          {"B", to_json(e.b)},
              {"X", to_json(e.x)},          {"alpha", e.alpha.values},
              {"beta", e.beta.values},      {"kappa", e.kappa.values},
              {"lambda", e.lambda.values}};
}

inline SplitExtension split_extension_from_json(const json& j,
                                                const MagmaRegistry& registry = {}) {
  for (const char* key : {"A", "B", "X", "alpha", "beta", "kappa", "lambda"})
    if (!j.is_object() || !j.contains(key))
      fail("MalformedInput", {}, std::string("split extension JSON needs \"") + key + "\"");
  Magma a = magma_from_json(j.at("A"), registry);
  Magma b = magma_from_json(j.at("B"), registry);
  Magma x = magma_from_json(j.at("X"), registry);
  auto vals = [&](const char* key) { return j.at(key).get<std::vector<int>>(); };
  return validate_split_extension(b, x, a, ZeroMap{a, b, vals("alpha")},
                                  ZeroMap{b, a, vals("beta")}, ZeroMap{x, a, vals("kappa")},
                                  ZeroMap{a, x, vals("lambda")});
}

inline json to_json(const SplitExtMorphism& m) {
  return json{{"f", m.f.values},
              {"p", m.p.values},
              {"source", to_json(m.source)},
              {"target", to_json(m.target)},
              {"u", m.u.values}};
}

inline SplitExtMorphism morphism_from_json(const json& j, const MagmaRegistry& registry = {}) {
  for (const char* key : {"source", "target", "f", "u", "p"})
    if (!j.is_object() || !j.contains(key))
      fail("MalformedInput", {}, std::string("morphism JSON needs \"") + key + "\"");
  SplitExtension src = split_extension_from_json(j.at("source"), registry);
  SplitExtension tgt = split_extension_from_json(j.at("target"), registry);
  Hom f = make_hom(src.b, tgt.b, j.at("f").get<std::vector<int>>());
  Hom u = make_hom(src.x, tgt.x, j.at("u").get<std::vector<int>>());
  Hom p = make_hom(src.a, tgt.a, j.at("p").get<std::vector<int>>());
  return validate_morphism(std::move(src), std::move(tgt), std::move(f), std::move(u),
                           std::move(p));
}

enum class JsonKind { Magma, Map, Action, SplitExtension, Morphism };

// Fingerprint-based autodetection: each kind has a distinguishing required
// field set; anything ambiguous or unknown is rejected.
inline JsonKind detect_kind(const json& j) {
  if (!j.is_object()) fail("MalformedInput", {}, "expected a JSON object");
  if (j.contains("source") && j.contains("target")) return JsonKind::Morphism;
  if (j.contains("alpha") && j.contains("beta")) return JsonKind::SplitExtension;
  if (j.contains("B") && j.contains("X") && j.contains("table")) return JsonKind::Action;
  if (j.contains("dom") && j.contains("cod") && j.contains("values")) return JsonKind::Map;
  if (j.contains("order") && j.contains("table")) return JsonKind::Magma;
  fail("MalformedInput", {}, "cannot determine input kind from its fields");
}

// One canonical text form everywhere: sorted keys, two-space indent, newline.
inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace magmakit

#endif  // MAGMAKIT_JSON_IO_HPP
