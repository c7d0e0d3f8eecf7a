#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "foxcohen/pi.hpp"

namespace foxcohen {

/// A model with the given groups and an all-zero bracket table.
inline SpaceModel zero_bracket_model(std::string name, int truncation,
                                     std::map<int, FgAbelianGroup> groups) {
  SpaceModel m;
  m.name = std::move(name);
  m.truncation = truncation;
  m.groups = std::move(groups);
  return m;
}

namespace detail {

inline SpaceModel make_s2_at_4() {
  SpaceModel m;
  m.name = "S2@4";
  m.truncation = 4;
  m.groups.emplace(2, FgAbelianGroup({0}));   // Z<iota2>
  m.groups.emplace(3, FgAbelianGroup({0}));   // Z<eta2>
  m.groups.emplace(4, FgAbelianGroup({2}));   // Z2<eta2 o eta3>
  m.brackets.set({2, 0}, {2, 0}, PiElement{3, {Int(2)}},
                 "[iota2,iota2] = 2*eta2; [iota2,eta2] = 2*eta2^2 = 0 is omitted");
  return m;
}

inline SpaceModel make_m3_at_3() {
  SpaceModel m;
  m.name = "M3@3";
  m.truncation = 3;
  m.groups.emplace(2, FgAbelianGroup({2}));   // Z2<i3>
  m.groups.emplace(3, FgAbelianGroup({4}));   // Z4<i3 o eta2>
  m.brackets.set({2, 0}, {2, 0}, PiElement{3, {Int(2)}},
                 "[i3,i3] has order 2; pinned to the unique order-2 element of Z4 (derived)");
  return m;
}

inline SpaceModel make_m7reduced_at_11() {
  SpaceModel m;
  m.name = "M7reduced@11";
  m.truncation = 11;
  m.groups.emplace(6, FgAbelianGroup({2}));   // Z2<i7>
  m.groups.emplace(11, FgAbelianGroup({2}));  // Z2<[i7,i7]>
  m.brackets.set({6, 0}, {6, 0}, PiElement{11, {Int(1)}},
                 "[i7,i7] = generator (order 2); middle degrees reduced to zero");
  return m;
}

inline SpaceModel make_s4reduced_at_8() {
  SpaceModel m;
  m.name = "S4reduced@8";
  m.truncation = 8;
  m.groups.emplace(4, FgAbelianGroup({0}));   // Z<iota4>
  m.groups.emplace(5, FgAbelianGroup({2}));   // Z2<eta4>
  m.groups.emplace(8, FgAbelianGroup({2}));   // Z2<[iota4,eta4]>
  m.brackets.set({4, 0}, {5, 0}, PiElement{8, {Int(1)}},
                 "[iota4,eta4] = generator; degrees 6, 7 reduced to zero");
  m.brackets.set({5, 0}, {4, 0}, PiElement{8, {Int(1)}},
                 "[iota4,eta4] = generator; degrees 6, 7 reduced to zero");
  return m;
}

inline SpaceModel make_wedge23_at_4() {
  SpaceModel m;
  m.name = "Wedge23@4";
  m.truncation = 4;
  m.groups.emplace(2, FgAbelianGroup({0}));   // Z<i1>
  m.groups.emplace(3, FgAbelianGroup({0}));   // Z<i2>
  m.groups.emplace(4, FgAbelianGroup({0}));   // Z<[i1,i2]>
  m.brackets.set({2, 0}, {3, 0}, PiElement{4, {Int(1)}},
                 "basic product [i1,i2] = generator; other classes reduced to zero");
  m.brackets.set({3, 0}, {2, 0}, PiElement{4, {Int(1)}},
                 "basic product [i1,i2] = generator; other classes reduced to zero");
  return m;
}

inline SpaceModel make_zero_bracket_at_6() {
  std::map<int, FgAbelianGroup> groups;
  groups.emplace(2, FgAbelianGroup({0}));
  groups.emplace(3, FgAbelianGroup({2}));
  groups.emplace(4, FgAbelianGroup({0, 3}));
  groups.emplace(6, FgAbelianGroup({4}));
  return zero_bracket_model("ZeroBracket@6", 6, std::move(groups));
}

}  // namespace detail

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "S2@4", "M3@3", "M7reduced@11", "S4reduced@8", "Wedge23@4", "ZeroBracket@6"};
  return names;
}

inline SpaceModel catalog_model(const std::string& name) {
  if (name == "S2@4") return detail::make_s2_at_4();
  if (name == "M3@3") return detail::make_m3_at_3();
  if (name == "M7reduced@11") return detail::make_m7reduced_at_11();
  if (name == "S4reduced@8") return detail::make_s4reduced_at_8();
  if (name == "Wedge23@4") return detail::make_wedge23_at_4();
  if (name == "ZeroBracket@6") return detail::make_zero_bracket_at_6();
  throw DomainError("catalog_model: unknown model '" + name + "'");
}

}  // namespace foxcohen
