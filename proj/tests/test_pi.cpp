#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "foxcohen/catalog.hpp"
#include "foxcohen/model_io.hpp"
#include "foxcohen/pi.hpp"

using namespace foxcohen;

namespace {

const char* kS2Document = R"({
  "name": "S2@4",
  "truncation": 4,
  "groups": {
    "2": {"orders": [0]},
    "3": {"orders": [0]},
    "4": {"orders": [2]}
  },
  "brackets": [
    {"a": [2, 0], "b": [2, 0], "value": {"degree": 3, "coeffs": [2]},
     "note": "[iota2,iota2] = 2*eta2"}
  ]
})";

PiElement random_pi(const SpaceModel& m, int degree, std::mt19937& rng) {
  const auto& orders = m.group(degree).orders();
  std::vector<Int> cs(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::uniform_int_distribution<long long> dist(0, orders[i] == 0 ? 19 : orders[i] - 1);
    cs[i] = dist(rng) - (orders[i] == 0 ? 10 : 0);
  }
  return element_make(m, degree, std::move(cs));
}

}  // namespace

TEST_CASE("FgAbelianGroup normalization") {
  FgAbelianGroup g({0, 1, 4, 1});
  CHECK(g.orders() == std::vector<long long>{0, 4});
  CHECK_THROWS_AS(FgAbelianGroup({-2}), DomainError);
  CHECK(FgAbelianGroup({2, 2}).size() == 4);
  CHECK_FALSE(FgAbelianGroup({0}).is_finite());
}

TEST_CASE("element arithmetic and normalization") {
  const SpaceModel m3 = catalog_model("M3@3");
  // Z4 in degree 3
  CHECK(element_add(m3, element_make(m3, 3, {Int(3)}), element_make(m3, 3, {Int(2)})) ==
        element_make(m3, 3, {Int(1)}));
  const SpaceModel s2 = catalog_model("S2@4");
  const PiElement one = element_make(s2, 2, {Int(1)});
  CHECK(element_add(s2, one, zero_element(s2, 2)) == one);
  CHECK(element_add(s2, one, one) == element_make(s2, 2, {Int(2)}));
  CHECK_THROWS_AS(element_add(s2, one, zero_element(s2, 3)), DomainError);
  CHECK(element_make(m3, 3, {Int(-1)}) == element_make(m3, 3, {Int(3)}));
}

TEST_CASE("element_order in a graded piece") {
  const SpaceModel zb = catalog_model("ZeroBracket@6");
  CHECK(element_order(zb, zero_element(zb, 3)) == Int(1));
  CHECK(element_order(zb, element_make(zb, 3, {Int(1)})) == Int(2));
  CHECK(element_order(zb, element_make(zb, 4, {Int(0), Int(1)})) == Int(3));
  CHECK_FALSE(element_order(zb, element_make(zb, 4, {Int(2), Int(0)})).has_value());
  CHECK(element_order(zb, element_make(zb, 6, {Int(2)})) == Int(2));  // 2 in Z4
}

TEST_CASE("bracket on pinned generator pairs") {
  const SpaceModel s2 = catalog_model("S2@4");
  const PiElement iota = element_make(s2, 2, {Int(1)});
  CHECK(bracket(s2, iota, iota) == element_make(s2, 3, {Int(2)}));
  CHECK(bracket(s2, iota, zero_element(s2, 2)).is_zero());

  const SpaceModel m3 = catalog_model("M3@3");
  const PiElement i3 = element_make(m3, 2, {Int(1)});
  CHECK(bracket(m3, i3, i3) == element_make(m3, 3, {Int(2)}));
}

TEST_CASE("bracket lands silently above the truncation") {
  const SpaceModel s2 = catalog_model("S2@4");
  const PiElement eta = element_make(s2, 3, {Int(1)});
  const PiElement out = bracket(s2, eta, eta);  // degree 5 > truncation 4
  CHECK(out.degree == 5);
  CHECK(out.is_zero());
}

TEST_CASE("bracket is bilinear on random inputs of every catalog model") {
  std::mt19937 rng(99);
  for (const auto& name : catalog_names()) {
    const SpaceModel m = catalog_model(name);
    for (int rep = 0; rep < 40; ++rep) {
      std::uniform_int_distribution<int> degree_dist(2, m.truncation);
      const int p = degree_dist(rng), q = degree_dist(rng);
      const PiElement x = random_pi(m, p, rng), xp = random_pi(m, p, rng),
                      y = random_pi(m, q, rng);
      CHECK(bracket(m, element_add(m, x, xp), y) ==
            element_add(m, bracket(m, x, y), bracket(m, xp, y)));
    }
  }
}

TEST_CASE("catalog models validate cleanly") {
  for (const auto& name : catalog_names()) {
    const SpaceModel m = catalog_model(name);
    INFO(name);
    CHECK(validate_space(m).empty());
  }
  CHECK_THROWS_AS(catalog_model("nope"), DomainError);
}

TEST_CASE("catalog models carry the pinned structure") {
  const SpaceModel s2 = catalog_model("S2@4");
  CHECK(s2.truncation == 4);
  CHECK(s2.group(2).orders() == std::vector<long long>{0});
  CHECK(s2.group(4).orders() == std::vector<long long>{2});

  const SpaceModel m7 = catalog_model("M7reduced@11");
  CHECK(m7.group(6).orders() == std::vector<long long>{2});
  CHECK(m7.group(11).orders() == std::vector<long long>{2});
  CHECK(m7.group(7).is_trivial());

  const SpaceModel s4 = catalog_model("S4reduced@8");
  const auto* e = s4.brackets.find({4, 0}, {5, 0});
  REQUIRE(e != nullptr);
  CHECK(e->value == element_make(s4, 8, {Int(1)}));
  CHECK_FALSE(e->note.empty());

  const SpaceModel w = catalog_model("Wedge23@4");
  REQUIRE(w.brackets.find({3, 0}, {2, 0}) != nullptr);
  CHECK(w.brackets.find({3, 0}, {2, 0})->value == element_make(w, 4, {Int(1)}));
}

TEST_CASE("validate_space flags a broken mirror") {
  SpaceModel m = catalog_model("S4reduced@8");
  // (-1)^(4*5) = +1, so a flipped sign must be caught
  m.brackets.set({5, 0}, {4, 0}, element_make(m, 8, {Int(1)}));
  CHECK(validate_space(m).empty());
  m.brackets.set({5, 0}, {4, 0}, zero_element(m, 8));
  auto violations = validate_space(m);
  REQUIRE_FALSE(violations.empty());
  bool found = false;
  for (const auto& v : violations) found = found || v.rule == "SymmetryViolation";
  CHECK(found);
}

TEST_CASE("validate_space flags torsion violations") {
  // an order-3 bracket value between two order-2 generators
  SpaceModel m;
  m.name = "bad-torsion";
  m.truncation = 3;
  m.groups.emplace(2, FgAbelianGroup({2, 2}));
  m.groups.emplace(3, FgAbelianGroup({9}));
  m.brackets.set({2, 0}, {2, 1}, PiElement{3, {Int(3)}});  // order 3 in Z9
  m.brackets.set({2, 1}, {2, 0}, PiElement{3, {Int(3)}});
  bool found = false;
  for (const auto& v : validate_space(m)) found = found || v.rule == "TorsionViolation";
  CHECK(found);
}

TEST_CASE("validate_space flags an odd-degree self bracket that is not 2-torsion") {
  SpaceModel m;
  m.name = "bad-self";
  m.truncation = 5;
  m.groups.emplace(3, FgAbelianGroup({9}));
  m.groups.emplace(5, FgAbelianGroup({9}));
  m.brackets.set({3, 0}, {3, 0}, PiElement{5, {Int(3)}});
  bool found = false;
  for (const auto& v : validate_space(m))
    found = found || v.rule == "SelfBracketTorsionViolation";
  CHECK(found);
}

TEST_CASE("load_space parses the sample document") {
  const SpaceModel m = load_space(kS2Document);
  CHECK(m.name == "S2@4");
  CHECK(m.groups.size() == 3);
  CHECK(m.truncation == 4);
  CHECK(bracket(m, element_make(m, 2, {Int(1)}), element_make(m, 2, {Int(1)})) ==
        element_make(m, 3, {Int(2)}));
}

TEST_CASE("load_space mirrors one-sided entries") {
  const char* doc = R"({
    "name": "wedge",
    "truncation": 4,
    "groups": {"2": {"orders": [0]}, "3": {"orders": [0]}, "4": {"orders": [0]}},
    "brackets": [
      {"a": [2, 0], "b": [3, 0], "value": {"degree": 4, "coeffs": [1]}, "note": "basic"}
    ]
  })";
  const SpaceModel m = load_space(doc);
  const auto* mirror = m.brackets.find({3, 0}, {2, 0});
  REQUIRE(mirror != nullptr);
  CHECK(mirror->value == element_make(m, 4, {Int(1)}));  // (-1)^(2*3) = +1
}

TEST_CASE("load_space mirrors with the graded sign") {
  const char* doc = R"({
    "name": "oddpair",
    "truncation": 7,
    "groups": {"3": {"orders": [0]}, "5": {"orders": [0]}, "7": {"orders": [0]}},
    "brackets": [
      {"a": [3, 0], "b": [5, 0], "value": {"degree": 7, "coeffs": [1]}}
    ]
  })";
  const SpaceModel m = load_space(doc);
  const auto* mirror = m.brackets.find({5, 0}, {3, 0});
  REQUIRE(mirror != nullptr);
  CHECK(mirror->value == element_make(m, 7, {Int(-1)}));  // (-1)^(3*5) = -1
}

TEST_CASE("load_space schema rejections") {
  CHECK_THROWS_AS(load_space("{"), ParseError);
  CHECK_THROWS_AS(load_space(R"({"name":"x","truncation":4,"groups":{},"brackets":[],"extra":1})"),
                  SchemaError);
  CHECK_THROWS_AS(load_space(R"({"name":"x","truncation":4,"groups":{"1":{"orders":[2]}},"brackets":[]})"),
                  SchemaError);
  CHECK_THROWS_AS(load_space(R"({"name":"x","truncation":1,"groups":{},"brackets":[]})"),
                  SchemaError);
  CHECK_THROWS_AS(load_space(R"({"name":"x","truncation":4,"groups":{"2":{"orders":[1]}},"brackets":[]})"),
                  SchemaError);
  CHECK_THROWS_AS(load_space(R"({"name":"x","truncation":4,"groups":{"2":{"orders":[0]}},
    "brackets":[{"a":[2,0],"b":[2,0],"value":{"degree":4,"coeffs":[]}}]})"),
                  SchemaError);
}

TEST_CASE("load_space rejects models that fail validation") {
  // both orientations given with a wrong relative sign
  const char* doc = R"({
    "name": "bad",
    "truncation": 7,
    "groups": {"3": {"orders": [0]}, "5": {"orders": [0]}, "7": {"orders": [0]}},
    "brackets": [
      {"a": [3, 0], "b": [5, 0], "value": {"degree": 7, "coeffs": [1]}},
      {"a": [5, 0], "b": [3, 0], "value": {"degree": 7, "coeffs": [1]}}
    ]
  })";
  CHECK_THROWS_AS(load_space(doc), ValidationError);
}

TEST_CASE("serialize/load round trip is the identity on the catalog") {
  for (const auto& name : catalog_names()) {
    const SpaceModel m = catalog_model(name);
    INFO(name);
    CHECK(load_space(serialize_space(m)) == m);
  }
}

TEST_CASE("zero_bracket_model builds a clean bracketless model") {
  std::map<int, FgAbelianGroup> groups;
  groups.emplace(2, FgAbelianGroup({0}));
  groups.emplace(5, FgAbelianGroup({2, 3}));
  const SpaceModel m = zero_bracket_model("plain", 5, std::move(groups));
  CHECK(validate_space(m).empty());
  CHECK(m.brackets.entry_count() == 0);
  CHECK(bracket(m, element_make(m, 2, {Int(4)}), element_make(m, 2, {Int(3)})).is_zero());
}
