#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "foxcohen/fox.hpp"
#include "foxcohen/pi.hpp"

namespace foxcohen {

/// An element of the level-n group: one coordinate per degree in [2, n+1].
struct CohenElement {
  int level = 1;
  std::vector<PiElement> coords;  // coords[d-2] has degree d

  const PiElement& coord(int degree) const { return coords[static_cast<std::size_t>(degree - 2)]; }
  PiElement& coord(int degree) { return coords[static_cast<std::size_t>(degree - 2)]; }

  bool operator==(const CohenElement&) const = default;

  bool is_identity() const {
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
};

inline void check_level(const SpaceModel& model, int level) {
  if (level < 1) throw DomainError("cohen: level must be >= 1");
  if (level > model.truncation - 1)
    throw DomainError("cohen: level must be <= truncation - 1 of model '" + model.name + "'");
}

inline CohenElement cohen_identity(const SpaceModel& model, int level) {
  check_level(model, level);
  CohenElement e;
  e.level = level;
  e.coords.reserve(static_cast<std::size_t>(level));
  for (int d = 2; d <= level + 1; ++d) e.coords.push_back(zero_element(model, d));
  return e;
}

/// Build an element from per-degree coefficient vectors; omitted degrees are zero.
inline CohenElement cohen_element(const SpaceModel& model, int level,
                                  const std::map<int, std::vector<Int>>& coords) {
  CohenElement e = cohen_identity(model, level);
  for (const auto& [d, cs] : coords) {
    if (d < 2 || d > level + 1)
      throw DomainError("cohen_element: degree " + std::to_string(d) + " outside [2, level+1]");
    e.coord(d) = element_make(model, d, cs);
  }
  return e;
}

enum class PhiSource {
  Closed,       // coefficients from the closed form
  CrossChecked  // recompute each coefficient by brute force and require agreement
};

namespace detail {

inline Int phi_coefficient(int k, int d, PhiSource src) {
  // coefficient of [x_k, y_j] in degree d = k + j - 1, i.e. phi(k-1, d-2)
  Int c = phi_closed(k - 1, d - 2);
  if (src == PhiSource::CrossChecked) {
    Int b = phi_bruteforce(k - 1, d - 2);
    if (b != c)
      throw DomainError("phi cross-check failed at (" + std::to_string(k - 1) + "," +
                        std::to_string(d - 2) + ")");
  }
  return c;
}

}  // namespace detail

/// The twisted product: coordinatewise sum plus, in each degree d, the
/// bracket corrections sum_{k+j=d+1} phi(k-1, d-2) [x_k, y_j].
inline CohenElement multiply(const SpaceModel& model, const CohenElement& x, const CohenElement& y,
                             PhiSource src = PhiSource::Closed) {
  if (x.level != y.level) throw DomainError("multiply: level mismatch");
  check_level(model, x.level);
  CohenElement r = cohen_identity(model, x.level);
  for (int d = 2; d <= x.level + 1; ++d) {
    PiElement acc = element_add(model, x.coord(d), y.coord(d));
    for (int k = 2; k <= d - 1; ++k) {
      const int j = d + 1 - k;
      if (x.coord(k).is_zero() || y.coord(j).is_zero()) continue;
      PiElement br = bracket(model, x.coord(k), y.coord(j));
      if (br.is_zero()) continue;
      acc = element_add(model, acc, element_scale(model, detail::phi_coefficient(k, d, src), br));
    }
    r.coord(d) = std::move(acc);
  }
  return r;
}

/// Inverse, solved degree by degree upward: each coordinate is minus the
/// input coordinate minus the bracket corrections already determined.
inline CohenElement inverse(const SpaceModel& model, const CohenElement& x) {
  check_level(model, x.level);
  CohenElement inv = cohen_identity(model, x.level);
  for (int d = 2; d <= x.level + 1; ++d) {
    PiElement corr = zero_element(model, d);
    for (int k = 2; k <= d - 1; ++k) {
      const int j = d + 1 - k;
      if (x.coord(k).is_zero() || inv.coord(j).is_zero()) continue;
      PiElement br = bracket(model, x.coord(k), inv.coord(j));
      if (br.is_zero()) continue;
      corr = element_add(model, corr,
                         element_scale(model, detail::phi_coefficient(k, d, PhiSource::Closed), br));
    }
    inv.coord(d) = element_negate(model, element_add(model, x.coord(d), corr));
  }
  return inv;
}

inline CohenElement commutator(const SpaceModel& model, const CohenElement& x,
                               const CohenElement& y) {
  CohenElement r = multiply(model, x, y);
  r = multiply(model, r, inverse(model, x));
  r = multiply(model, r, inverse(model, y));
  return r;
}

inline CohenElement power(const SpaceModel& model, const CohenElement& x, long long m) {
  CohenElement base = m < 0 ? inverse(model, x) : x;
  long long reps = m < 0 ? -m : m;
  CohenElement acc = cohen_identity(model, x.level);
  for (long long i = 0; i < reps; ++i) acc = multiply(model, acc, base);
  return acc;
}

struct ElementOrder {
  enum class Kind { Finite, Infinite, ExceedsBound };
  Kind kind = Kind::Finite;
  Int value;  // meaningful for Finite

  static ElementOrder finite(Int v) { return {Kind::Finite, std::move(v)}; }
  static ElementOrder infinite() { return {Kind::Infinite, 0}; }
  static ElementOrder exceeds_bound() { return {Kind::ExceedsBound, 0}; }

  bool operator==(const ElementOrder&) const = default;
};

/// Order of x by iterated powers. The lowest nonzero coordinate of x^m is
/// exactly m times that coordinate (corrections need two nonzero lower
/// degrees), so a free component there settles the question immediately.
inline ElementOrder order(const SpaceModel& model, const CohenElement& x, long long bound = 512) {
  if (x.is_identity()) return ElementOrder::finite(1);
  for (int d = 2; d <= x.level + 1; ++d) {
    const PiElement& c = x.coord(d);
    if (c.is_zero()) continue;
    const auto& orders = model.group(d).orders();
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
      if (c.coeffs[i] != 0 && orders[i] == 0) return ElementOrder::infinite();
    break;
  }
  CohenElement p = x;
  for (long long m = 2; m <= bound; ++m) {
    p = multiply(model, p, x);
    if (p.is_identity()) return ElementOrder::finite(m);
  }
  return ElementOrder::exceeds_bound();
}

/// Drop the top coordinate; a surjective homomorphism onto level n-1.
inline CohenElement project(const SpaceModel& model, const CohenElement& x) {
  if (x.level <= 1) throw DomainError("project: level-1 elements have no lower level");
  check_level(model, x.level);
  CohenElement r = x;
  r.level = x.level - 1;
  r.coords.pop_back();
  return r;
}

/// Homogeneous generator elements: coefficient 1 in one factor of one degree.
inline std::vector<std::pair<GenRef, CohenElement>> generator_elements(const SpaceModel& model,
                                                                       int level) {
  check_level(model, level);
  std::vector<std::pair<GenRef, CohenElement>> out;
  for (int d = 2; d <= level + 1; ++d) {
    const auto rank = model.group(d).rank();
    for (std::size_t i = 0; i < rank; ++i) {
      CohenElement e = cohen_identity(model, level);
      e.coord(d).coeffs[i] = 1;
      out.emplace_back(GenRef{d, static_cast<int>(i)}, std::move(e));
    }
  }
  return out;
}

struct AbelianReport {
  bool abelian = true;
  std::optional<std::pair<GenRef, GenRef>> witness;
};

/// Pairwise-commuting homogeneous generators generate an abelian group, so
/// testing generator pairs decides the question.
inline AbelianReport is_abelian(const SpaceModel& model, int level) {
  auto gens = generator_elements(model, level);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commutator(model, gens[i].second, gens[j].second).is_identity())
        return AbelianReport{false, std::make_pair(gens[i].first, gens[j].first)};
  return AbelianReport{};
}

struct NilpotencyResult {
  bool exceeded = false;
  int nilpotency_class = 0;  // meaningful when !exceeded

  static NilpotencyResult found(int c) { return {false, c}; }
  static NilpotencyResult exceeds_depth() { return {true, 0}; }
};

namespace detail {
struct CohenLess {
  bool operator()(const CohenElement& a, const CohenElement& b) const {
    if (a.level != b.level) return a.level < b.level;
    for (std::size_t d = 0; d < a.coords.size(); ++d) {
      if (a.coords[d].coeffs != b.coords[d].coeffs) return a.coords[d].coeffs < b.coords[d].coeffs;
    }
    return false;
  }
};
}  // namespace detail

/// Smallest c <= depth with all left-normed (c+1)-fold generator commutators
/// trivial. Breadth is kept in check by extending only the distinct nonzero
/// commutators of the previous weight.
inline NilpotencyResult nilpotency_probe(const SpaceModel& model, int level, int depth) {
  if (depth < 1) throw DomainError("nilpotency_probe: depth must be >= 1");
  auto gens = generator_elements(model, level);
  std::set<CohenElement, detail::CohenLess> current;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      CohenElement c = commutator(model, gens[i].second, gens[j].second);
      if (!c.is_identity()) current.insert(std::move(c));
    }
  for (int c = 1; c <= depth; ++c) {
    if (current.empty()) return NilpotencyResult::found(c);
    std::set<CohenElement, detail::CohenLess> next;
    for (const auto& x : current)
      for (const auto& [ref, g] : gens) {
        CohenElement cm = commutator(model, x, g);
        if (!cm.is_identity()) next.insert(std::move(cm));
      }
    current = std::move(next);
  }
  return NilpotencyResult::exceeds_depth();
}

struct GroupEnumeration {
  std::vector<CohenElement> elements;
  std::map<Int, long long> order_census;
  Int exponent = 1;
};

/// Full element list of a finite level group, with order census, exponent and
/// a closure check of the multiplication over the listed elements.
inline GroupEnumeration enumerate_group(const SpaceModel& model, int level,
                                        const Int& size_bound = 4096) {
  check_level(model, level);
  Int total = 1;
  for (int d = 2; d <= level + 1; ++d) {
    if (!model.group(d).is_finite())
      throw EnumerationError("enumerate_group: degree " + std::to_string(d) + " is infinite");
    total *= model.group(d).size();
    if (total > size_bound) throw EnumerationError("enumerate_group: size bound exceeded");
  }

  GroupEnumeration out;
  // mixed-radix walk over all coordinates
  std::vector<std::pair<int, std::size_t>> slots;  // (degree, factor index)
  std::vector<long long> radix;
  for (int d = 2; d <= level + 1; ++d)
    for (std::size_t i = 0; i < model.group(d).rank(); ++i) {
      slots.emplace_back(d, i);
      radix.push_back(model.group(d).orders()[i]);
    }
  std::vector<long long> digits(slots.size(), 0);
  for (;;) {
    CohenElement e = cohen_identity(model, level);
    for (std::size_t t = 0; t < slots.size(); ++t)
      e.coord(slots[t].first).coeffs[slots[t].second] = digits[t];
    out.elements.push_back(std::move(e));
    std::size_t t = 0;
    while (t < slots.size() && ++digits[t] == radix[t]) digits[t++] = 0;
    if (t == slots.size()) break;
    if (slots.empty()) break;
  }

  std::set<CohenElement, detail::CohenLess> universe(out.elements.begin(), out.elements.end());
  for (const auto& e : out.elements) {
    ElementOrder o = order(model, e, static_cast<long long>(total));
    if (o.kind != ElementOrder::Kind::Finite)
      throw EnumerationError("enumerate_group: element order exceeded the group size");
    ++out.order_census[o.value];
    out.exponent = lcm(out.exponent, o.value);
  }
  // Cayley closure: products of listed elements are listed elements
  const std::size_t cap = out.elements.size() <= 64 ? out.elements.size() : 64;
  for (std::size_t i = 0; i < cap; ++i)
    for (std::size_t j = 0; j < cap; ++j)
      if (universe.count(multiply(model, out.elements[i], out.elements[j])) == 0)
        throw EnumerationError("enumerate_group: product escaped the element list");
  return out;
}

/// Associativity is a property of the bracket table, not an axiom of the
/// product; this diagnostic hunts for a failing triple and returns it.
inline std::optional<std::array<CohenElement, 3>> associativity_diagnostic(
    const SpaceModel& model, int level, int samples = 200, unsigned seed = 12345) {
  check_level(model, level);
  std::mt19937 rng(seed);
  auto random_element = [&]() {
    CohenElement e = cohen_identity(model, level);
    for (int d = 2; d <= level + 1; ++d) {
      const auto& orders = model.group(d).orders();
      for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] == 0) {
          std::uniform_int_distribution<long long> dist(-9, 9);
          e.coord(d).coeffs[i] = dist(rng);
        } else {
          std::uniform_int_distribution<long long> dist(0, orders[i] - 1);
          e.coord(d).coeffs[i] = dist(rng);
        }
      }
    }
    return e;
  };
  for (int s = 0; s < samples; ++s) {
    CohenElement x = random_element(), y = random_element(), z = random_element();
    CohenElement left = multiply(model, multiply(model, x, y), z);
    CohenElement right = multiply(model, x, multiply(model, y, z));
    if (!(left == right)) return std::array<CohenElement, 3>{x, y, z};
  }
  return std::nullopt;
}

}  // namespace foxcohen
