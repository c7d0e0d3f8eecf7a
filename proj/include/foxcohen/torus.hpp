#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "foxcohen/fox.hpp"
#include "foxcohen/numtheory.hpp"
#include "foxcohen/pi.hpp"

namespace foxcohen {

/// Normal-form ordering on subsets. Colexicographic: a < b iff the largest
/// element where they differ belongs to b.
inline bool colex_less(const IndexSet& a, const IndexSet& b) {
  const auto& xs = a.elements();
  const auto& ys = b.elements();
  auto i = xs.rbegin();
  auto j = ys.rbegin();
  for (; i != xs.rend() && j != ys.rend(); ++i, ++j)
    if (*i != *j) return *i < *j;
  return xs.size() < ys.size();
}

enum class SubsetOrder { Colex, ColexReversed };

inline bool subset_precedes(const IndexSet& a, const IndexSet& b, SubsetOrder order) {
  return order == SubsetOrder::Colex ? colex_less(a, b) : colex_less(b, a);
}

namespace detail {
struct SlotLess {
  bool operator()(const IndexSet& a, const IndexSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  }
};
}  // namespace detail

/// An element of the class-2 truncation of the level-(n+1) torus group:
/// one graded value per nonempty subset of {1..n}, stored sparsely.
struct TauElement {
  int level = 1;                                         // models tau_{level+1}
  std::map<IndexSet, PiElement, detail::SlotLess> slots;  // zero slots omitted

  bool operator==(const TauElement&) const = default;
  bool is_identity() const { return slots.empty(); }

  void set_slot(const IndexSet& a, PiElement v) {
    if (v.is_zero())
      slots.erase(a);
    else
      slots[a] = std::move(v);
  }

  PiElement slot(const SpaceModel& model, const IndexSet& a) const {
    auto it = slots.find(a);
    return it == slots.end() ? zero_element(model, a.size() + 1) : it->second;
  }
};

inline TauElement tau_identity(int level) {
  if (level < 1) throw DomainError("tau: level must be >= 1");
  return TauElement{level, {}};
}

/// Image of a degree-(|a|+1) class in the slot indexed by a.
inline TauElement embed(const SpaceModel& model, const PiElement& x, const IndexSet& a,
                        int level) {
  if (level < 1) throw DomainError("embed: level must be >= 1");
  if (a.empty() || a.max() > level) throw DomainError("embed: subset must lie inside {1..level}");
  if (x.degree != a.size() + 1)
    throw DomainError("embed: class degree must be |a| + 1");
  TauElement t = tau_identity(level);
  t.set_slot(a, normalize(model, x));
  return t;
}

/// The product is only modeled for 2-step tables: no bracket may consume a
/// degree that some nonzero bracket lands in.
inline void check_class2(const SpaceModel& model) {
  std::set<int> output_degrees;
  for (const auto* e : model.brackets.entries())
    if (!e->value.is_zero() && e->value.degree <= model.truncation)
      output_degrees.insert(e->value.degree);
  for (const auto* e : model.brackets.entries()) {
    if (e->value.is_zero()) continue;
    if (output_degrees.count(e->a.degree) || output_degrees.count(e->b.degree))
      throw ModelNotClass2("model '" + model.name +
                           "': bracket arguments of degree " + std::to_string(e->a.degree) + "x" +
                           std::to_string(e->b.degree) + " overlap bracket output degrees");
  }
}

/// Cocycle product: slotwise sum plus, in slot c, the signed brackets
/// fox_sign(a,b) [x_a, y_b] over disjoint partitions c = a | b with b < a
/// in the normal-form order.
inline TauElement tau_multiply(const SpaceModel& model, const TauElement& x, const TauElement& y,
                               SubsetOrder order = SubsetOrder::Colex) {
  if (x.level != y.level) throw DomainError("tau_multiply: level mismatch");
  check_class2(model);
  TauElement r = tau_identity(x.level);

  std::map<IndexSet, PiElement, detail::SlotLess> acc;
  auto add_to = [&](const IndexSet& c, const PiElement& v) {
    if (v.is_zero()) return;
    auto it = acc.find(c);
    if (it == acc.end())
      acc.emplace(c, v);
    else
      it->second = element_add(model, it->second, v);
  };

  for (const auto& [c, v] : x.slots) add_to(c, v);
  for (const auto& [c, v] : y.slots) add_to(c, v);
  for (const auto& [a, xa] : x.slots)
    for (const auto& [b, yb] : y.slots) {
      if (!a.disjoint(b)) continue;
      if (!subset_precedes(b, a, order)) continue;
      PiElement br = bracket(model, xa, yb);
      if (br.is_zero()) continue;
      add_to(a.unite(b), element_scale(model, fox_sign(a, b), br));
    }

  for (auto& [c, v] : acc) r.set_slot(c, std::move(v));
  return r;
}

/// Slotwise solve, ascending by subset size; valid in class 2 where all
/// corrections come from proper sub-partitions.
inline TauElement tau_inverse(const SpaceModel& model, const TauElement& x,
                              SubsetOrder order = SubsetOrder::Colex) {
  check_class2(model);
  TauElement inv = tau_identity(x.level);

  // all slots that can appear: supports of x plus unions of disjoint pairs
  std::set<IndexSet, detail::SlotLess> support;
  for (const auto& [c, v] : x.slots) support.insert(c);
  for (const auto& [a, va] : x.slots)
    for (const auto& [b, vb] : x.slots)
      if (a.disjoint(b)) support.insert(a.unite(b));

  for (const IndexSet& c : support) {  // SlotLess ascends by size
    PiElement corr = zero_element(model, c.size() + 1);
    for (const auto& [a, xa] : x.slots) {
      if (a.size() >= c.size()) continue;
      if (!std::includes(c.elements().begin(), c.elements().end(), a.elements().begin(),
                         a.elements().end()))
        continue;
      // b = c \ a
      std::vector<int> rest;
      std::set_difference(c.elements().begin(), c.elements().end(), a.elements().begin(),
                          a.elements().end(), std::back_inserter(rest));
      IndexSet b(std::move(rest));
      auto it = inv.slots.find(b);
      if (it == inv.slots.end()) continue;
      if (!subset_precedes(b, a, order)) continue;
      PiElement br = bracket(model, xa, it->second);
      if (br.is_zero()) continue;
      corr = element_add(model, corr, element_scale(model, fox_sign(a, b), br));
    }
    PiElement val = element_negate(model, element_add(model, x.slot(model, c), corr));
    inv.set_slot(c, std::move(val));
  }
  return inv;
}

inline TauElement tau_commutator(const SpaceModel& model, const TauElement& x, const TauElement& y,
                                 SubsetOrder order = SubsetOrder::Colex) {
  TauElement r = tau_multiply(model, x, y, order);
  r = tau_multiply(model, r, tau_inverse(model, x, order), order);
  r = tau_multiply(model, r, tau_inverse(model, y, order), order);
  return r;
}

/// Multiplicity of pi_{k+1} inside tau_{tau_index}: C(tau_index - 1, k).
inline std::map<int, Int> tau_multiplicities(int tau_index) {
  if (tau_index < 2) throw DomainError("tau_multiplicities: index must be >= 2");
  std::map<int, Int> out;
  for (int k = 1; k <= tau_index - 1; ++k) out[k + 1] = binomial(tau_index - 1, k);
  return out;
}

/// Kernel multiplicities of the split sequence onto tau_{tau_index - 1}:
/// sigma_i = C(tau_index - 2, i - 2) copies of pi_i.
inline std::map<int, Int> tau_kernel_multiplicities(int tau_index) {
  if (tau_index < 2) throw DomainError("tau_kernel_multiplicities: index must be >= 2");
  std::map<int, Int> out;
  for (int i = 2; i <= tau_index; ++i) out[i] = binomial(tau_index - 2, i - 2);
  return out;
}

}  // namespace foxcohen
