#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "foxcohen/pi.hpp"

namespace foxcohen {

namespace detail {

inline void require_fields(const nlohmann::json& obj, const std::set<std::string>& allowed,
                           const std::set<std::string>& required, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object");
  for (const auto& [k, v] : obj.items())
    if (allowed.count(k) == 0) throw SchemaError(where + ": unknown field '" + k + "'");
  for (const auto& k : required)
    if (!obj.contains(k)) throw SchemaError(where + ": missing field '" + k + "'");
}

inline Int json_to_int(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError(where + ": not an integer");
    }
  }
  throw SchemaError(where + ": expected an integer (number or decimal string)");
}

inline std::vector<Int> json_to_coeffs(const nlohmann::json& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + ": expected an array of integers");
  std::vector<Int> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(json_to_int(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline PiElement json_to_element(const nlohmann::json& v, const std::string& where) {
  require_fields(v, {"degree", "coeffs"}, {"degree", "coeffs"}, where);
  if (!v["degree"].is_number_integer()) throw SchemaError(where + ".degree: expected an integer");
  PiElement e;
  e.degree = v["degree"].get<int>();
  e.coeffs = json_to_coeffs(v["coeffs"], where + ".coeffs");
  return e;
}

}  // namespace detail

/// Parse a space-model document. Entries given in one orientation are
/// mirrored with the graded-symmetry sign; the completed model is validated
/// and a failing model is rejected with the violation list in the message.
inline SpaceModel load_space(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("space model: ") + e.what());
  }

  detail::require_fields(doc, {"name", "truncation", "groups", "brackets"},
                         {"name", "truncation", "groups", "brackets"}, "document");
  SpaceModel model;
  if (!doc["name"].is_string()) throw SchemaError("name: expected a string");
  model.name = doc["name"].get<std::string>();
  if (!doc["truncation"].is_number_integer()) throw SchemaError("truncation: expected an integer");
  model.truncation = doc["truncation"].get<int>();
  if (model.truncation < 2) throw SchemaError("truncation: must be >= 2");

  if (!doc["groups"].is_object()) throw SchemaError("groups: expected an object");
  for (const auto& [key, val] : doc["groups"].items()) {
    int degree = 0;
    try {
      std::size_t pos = 0;
      degree = std::stoi(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw SchemaError("groups: key '" + key + "' is not a degree");
    }
    if (degree < 2 || degree > model.truncation)
      throw SchemaError("groups." + key + ": degree outside [2, truncation]");
    detail::require_fields(val, {"orders"}, {"orders"}, "groups." + key);
    if (!val["orders"].is_array()) throw SchemaError("groups." + key + ".orders: expected an array");
    std::vector<long long> orders;
    for (const auto& o : val["orders"]) {
      if (!o.is_number_integer()) throw SchemaError("groups." + key + ".orders: expected integers");
      const long long d = o.get<long long>();
      if (d < 0 || d == 1) throw SchemaError("groups." + key + ".orders: factors must be 0 or >= 2");
      orders.push_back(d);
    }
    model.groups.emplace(degree, FgAbelianGroup(std::move(orders)));
  }

  if (!doc["brackets"].is_array()) throw SchemaError("brackets: expected an array");
  std::size_t idx = 0;
  for (const auto& be : doc["brackets"]) {
    const std::string where = "brackets[" + std::to_string(idx++) + "]";
    detail::require_fields(be, {"a", "b", "value", "note"}, {"a", "b", "value"}, where);
    auto parse_ref = [&](const char* fld) {
      const auto& r = be[fld];
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
          !r[1].is_number_integer())
        throw SchemaError(where + "." + fld + ": expected [degree, genIndex]");
      return GenRef{r[0].get<int>(), r[1].get<int>()};
    };
    const GenRef a = parse_ref("a");
    const GenRef b = parse_ref("b");
    PiElement value = detail::json_to_element(be["value"], where + ".value");
    if (value.degree != a.degree + b.degree - 1)
      throw SchemaError(where + ".value: degree must be a.degree + b.degree - 1");
    const std::string note = be.contains("note") ? be["note"].get<std::string>() : "";
    if (model.brackets.contains(a, b))
      throw SchemaError(where + ": duplicate entry for " + to_string(a) + "x" + to_string(b));
    try {
      value = normalize(model, std::move(value));
    } catch (const DomainError& e) {
      throw SchemaError(where + ".value: " + e.what());
    }
    model.brackets.set(a, b, std::move(value), note);
  }

  // mirror completion: fill the missing orientation with sign (-1)^(pq)
  for (const auto* e : model.brackets.entries()) {
    if (e->a == e->b) continue;
    if (model.brackets.contains(e->b, e->a)) continue;
    const long long pq = static_cast<long long>(e->a.degree) * e->b.degree;
    model.brackets.set(e->b, e->a, element_scale(model, parity_sign(pq), e->value), e->note);
  }

  auto violations = validate_space(model);
  if (!violations.empty()) {
    std::string msg = "space model '" + model.name + "' failed validation:";
    for (const auto& v : violations) msg += "\n  [" + v.rule + "] " + v.location + ": " + v.message;
    throw ValidationError(msg);
  }
  return model;
}

inline std::string serialize_space(const SpaceModel& model) {
  nlohmann::json doc;
  doc["name"] = model.name;
  doc["truncation"] = model.truncation;
  doc["groups"] = nlohmann::json::object();
  for (const auto& [d, g] : model.groups)
    doc["groups"][std::to_string(d)] = {{"orders", g.orders()}};
  doc["brackets"] = nlohmann::json::array();
  for (const auto* e : model.brackets.entries()) {
    nlohmann::json val;
    val["degree"] = e->value.degree;
    val["coeffs"] = nlohmann::json::array();
    for (const Int& c : e->value.coeffs) val["coeffs"].push_back(c.str());
    doc["brackets"].push_back({{"a", {e->a.degree, e->a.index}},
                               {"b", {e->b.degree, e->b.index}},
                               {"value", val},
                               {"note", e->note}});
  }
  return doc.dump(2);
}

}  // namespace foxcohen
