#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "foxcohen/cohen.hpp"
#include "foxcohen/model_io.hpp"
#include "foxcohen/torus.hpp"

namespace foxcohen {

/// Element literal: JSON object mapping degree strings to coefficient
/// arrays, e.g. {"2":[1],"3":[0]}. Omitted degrees are zero.
inline CohenElement parse_cohen_literal(const SpaceModel& model, int level,
                                        const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("element literal: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("element literal: expected an object");
  CohenElement e = cohen_identity(model, level);
  for (const auto& [key, val] : doc.items()) {
    int degree = 0;
    try {
      std::size_t pos = 0;
      degree = std::stoi(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw SchemaError("element literal: key '" + key + "' is not a degree");
    }
    if (degree < 2 || degree > level + 1)
      throw SchemaError("element literal: degree " + key + " outside [2, level+1]");
    e.coord(degree) = element_make(model, degree,
                                   detail::json_to_coeffs(val, "element literal[" + key + "]"));
  }
  return e;
}

/// Canonical rendering: every degree with a nonzero group, ascending.
inline std::string format_cohen_literal(const SpaceModel& model, const CohenElement& x) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int d = 2; d <= x.level + 1; ++d) {
    if (model.group(d).is_trivial()) continue;
    if (!first) os << ",";
    first = false;
    os << "\"" << d << "\":[";
    const auto& cs = x.coord(d).coeffs;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i > 0) os << ",";
      os << cs[i];
    }
    os << "]";
  }
  os << "}";
  return os.str();
}

/// Tau literal: JSON object mapping subset strings ("1,3") to coefficient
/// arrays for the class in the slot of that subset.
inline TauElement parse_tau_literal(const SpaceModel& model, int level, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("tau literal: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("tau literal: expected an object");
  TauElement t = tau_identity(level);
  for (const auto& [key, val] : doc.items()) {
    std::vector<int> xs;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t pos = 0;
        xs.push_back(std::stoi(part, &pos));
        if (pos != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw SchemaError("tau literal: subset '" + key + "' is not a comma list of indices");
      }
    }
    IndexSet a;
    try {
      a = IndexSet(std::move(xs));
    } catch (const DomainError& e) {
      throw SchemaError("tau literal: subset '" + key + "': " + e.what());
    }
    if (a.empty() || a.max() > level)
      throw SchemaError("tau literal: subset '" + key + "' outside {1..level}");
    PiElement v = element_make(model, a.size() + 1,
                               detail::json_to_coeffs(val, "tau literal[" + key + "]"));
    t.set_slot(a, std::move(v));
  }
  return t;
}

inline std::string format_tau_literal(const TauElement& x) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [a, v] : x.slots) {
    if (!first) os << ",";
    first = false;
    os << "\"";
    const auto& xs = a.elements();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) os << ",";
      os << xs[i];
    }
    os << "\":[";
    for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
      if (i > 0) os << ",";
      os << v.coeffs[i];
    }
    os << "]";
  }
  os << "}";
  return os.str();
}

}  // namespace foxcohen
