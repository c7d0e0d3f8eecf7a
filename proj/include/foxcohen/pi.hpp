#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "foxcohen/bigint.hpp"

namespace foxcohen {

/// A finitely generated abelian group as an ordered list of cyclic factors.
/// Order 0 denotes an infinite cyclic factor; d >= 2 a factor of order d.
/// Factors of order 1 are dropped on construction; the remaining order and
/// basis of factors is part of the model and is never rewritten.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  explicit FgAbelianGroup(std::vector<long long> orders) {
    for (long long d : orders) {
      if (d < 0 || d == 1) {
        if (d == 1) continue;
        throw DomainError("FgAbelianGroup: factor orders must be 0 or >= 2");
      }
    }
    for (long long d : orders)
      if (d != 1) orders_.push_back(d);
  }

  const std::vector<long long>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  bool is_trivial() const { return orders_.empty(); }
  bool is_finite() const {
    for (long long d : orders_)
      if (d == 0) return false;
    return true;
  }
  Int size() const {
    Int s = 1;
    for (long long d : orders_) {
      if (d == 0) throw DomainError("FgAbelianGroup::size: group is infinite");
      s *= d;
    }
    return s;
  }

  bool operator==(const FgAbelianGroup&) const = default;

 private:
  std::vector<long long> orders_;
};

/// An element of one graded piece: a coefficient per factor of that degree's
/// group, normalized so finite-factor coefficients lie in [0, order).
struct PiElement {
  int degree = 2;
  std::vector<Int> coeffs;

  bool operator==(const PiElement&) const = default;

  bool is_zero() const {
    for (const Int& c : coeffs)
      if (c != 0) return false;
    return true;
  }
};

/// Degree and generator index of one graded generator.
struct GenRef {
  int degree = 2;
  int index = 0;

  auto operator<=>(const GenRef&) const = default;
};

inline std::string to_string(const GenRef& g) {
  return "(" + std::to_string(g.degree) + "," + std::to_string(g.index) + ")";
}

/// Generator-pair table of Whitehead brackets; absent entries are zero.
class BracketTable {
 public:
  struct Entry {
    GenRef a;
    GenRef b;
    PiElement value;
    std::string note;
  };

  void set(GenRef a, GenRef b, PiElement value, std::string note = "") {
    entries_[key(a, b)] = Entry{a, b, std::move(value), std::move(note)};
  }

  const Entry* find(GenRef a, GenRef b) const {
    auto it = entries_.find(key(a, b));
    return it == entries_.end() ? nullptr : &it->second;
  }

  bool contains(GenRef a, GenRef b) const { return entries_.count(key(a, b)) > 0; }

  std::vector<const Entry*> entries() const {
    std::vector<const Entry*> out;
    out.reserve(entries_.size());
    for (const auto& [k, e] : entries_) out.push_back(&e);
    return out;
  }

  std::size_t entry_count() const { return entries_.size(); }

  bool operator==(const BracketTable& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    for (const auto& [k, e] : entries_) {
      auto it = other.entries_.find(k);
      if (it == other.entries_.end()) return false;
      const Entry& o = it->second;
      if (e.value != o.value || e.note != o.note) return false;
    }
    return true;
  }

 private:
  using Key = std::tuple<int, int, int, int>;
  static Key key(GenRef a, GenRef b) { return {a.degree, a.index, b.degree, b.index}; }
  std::map<Key, Entry> entries_;
};

/// A truncated graded abelian group with a bilinear bracket table; the only
/// input a user supplies. Immutable once validated; safe to share.
struct SpaceModel {
  std::string name;
  int truncation = 2;                    // largest modeled degree, >= 2
  std::map<int, FgAbelianGroup> groups;  // degree in [2, truncation] -> group
  BracketTable brackets;

  const FgAbelianGroup& group(int degree) const {
    static const FgAbelianGroup trivial;
    auto it = groups.find(degree);
    return it == groups.end() ? trivial : it->second;
  }

  bool operator==(const SpaceModel&) const = default;
};

inline PiElement zero_element(const SpaceModel& model, int degree) {
  return PiElement{degree, std::vector<Int>(model.group(degree).rank(), Int(0))};
}

inline PiElement normalize(const SpaceModel& model, PiElement x) {
  const auto& orders = model.group(x.degree).orders();
  if (x.coeffs.size() != orders.size())
    throw DomainError("PiElement: coefficient count does not match factor count in degree " +
                      std::to_string(x.degree));
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0) continue;
    Int& c = x.coeffs[i];
    c %= orders[i];
    if (c < 0) c += orders[i];
  }
  return x;
}

inline PiElement element_make(const SpaceModel& model, int degree, std::vector<Int> coeffs) {
  return normalize(model, PiElement{degree, std::move(coeffs)});
}

inline PiElement element_add(const SpaceModel& model, const PiElement& x, const PiElement& y) {
  if (x.degree != y.degree) throw DomainError("element_add: degree mismatch");
  PiElement r = x;
  if (y.coeffs.size() != r.coeffs.size()) throw DomainError("element_add: shape mismatch");
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += y.coeffs[i];
  return normalize(model, std::move(r));
}

inline PiElement element_negate(const SpaceModel& model, const PiElement& x) {
  PiElement r = x;
  for (Int& c : r.coeffs) c = -c;
  return normalize(model, std::move(r));
}

inline PiElement element_scale(const SpaceModel& model, const Int& m, const PiElement& x) {
  PiElement r = x;
  for (Int& c : r.coeffs) c *= m;
  return normalize(model, std::move(r));
}

/// Order of x in its graded piece; nullopt means infinite.
inline std::optional<Int> element_order(const SpaceModel& model, const PiElement& x) {
  const auto& orders = model.group(x.degree).orders();
  Int ord = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    if (orders[i] == 0) return std::nullopt;
    ord = lcm(ord, Int(orders[i]) / gcd(Int(orders[i]), x.coeffs[i]));
  }
  return ord;
}

/// Bilinear extension of the generator table. Products landing above the
/// model truncation are silently zero: that is the truncation itself, not
/// an error condition.
inline PiElement bracket(const SpaceModel& model, const PiElement& x, const PiElement& y) {
  const int out_degree = x.degree + y.degree - 1;
  PiElement r = zero_element(model, out_degree);
  if (out_degree > model.truncation || r.coeffs.empty()) return r;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) {
      if (y.coeffs[j] == 0) continue;
      const auto* e = model.brackets.find(GenRef{x.degree, static_cast<int>(i)},
                                          GenRef{y.degree, static_cast<int>(j)});
      if (e == nullptr) continue;
      const Int scale = x.coeffs[i] * y.coeffs[j];
      for (std::size_t t = 0; t < r.coeffs.size(); ++t)
        r.coeffs[t] += scale * e->value.coeffs[t];
    }
  }
  return normalize(model, std::move(r));
}

struct Violation {
  std::string rule;      // SymmetryViolation, TorsionViolation, ...
  std::string location;  // which entry / degree
  std::string message;
};

/// Structural checks on a model: degree bounds, entry shapes, graded symmetry
/// entry(b,a) = (-1)^(pq) entry(a,b), self-bracket 2-torsion in odd degree,
/// and the gcd torsion bound on finite generator pairs.
inline std::vector<Violation> validate_space(const SpaceModel& model) {
  std::vector<Violation> out;
  auto loc = [](GenRef a, GenRef b) { return "entry " + to_string(a) + "x" + to_string(b); };

  if (model.truncation < 2)
    out.push_back({"DegreeBoundViolation", "model", "truncation must be >= 2"});
  for (const auto& [d, g] : model.groups) {
    if (d < 2 || d > model.truncation)
      out.push_back({"DegreeBoundViolation", "degree " + std::to_string(d),
                     "group degree outside [2, truncation]"});
  }

  for (const auto* e : model.brackets.entries()) {
    const int p = e->a.degree, q = e->b.degree;
    const std::string where = loc(e->a, e->b);
    if (p < 2 || q < 2 || p > model.truncation || q > model.truncation) {
      out.push_back({"DegreeBoundViolation", where, "argument degree outside [2, truncation]"});
      continue;
    }
    if (e->a.index < 0 || static_cast<std::size_t>(e->a.index) >= model.group(p).rank() ||
        e->b.index < 0 || static_cast<std::size_t>(e->b.index) >= model.group(q).rank()) {
      out.push_back({"ShapeViolation", where, "generator index out of range"});
      continue;
    }
    if (e->value.degree != p + q - 1) {
      out.push_back({"ShapeViolation", where, "value degree must be p+q-1"});
      continue;
    }
    if (p + q - 1 > model.truncation && !e->value.is_zero()) {
      out.push_back({"DegreeBoundViolation", where, "entry lands above the truncation"});
      continue;
    }
    if (e->value.coeffs.size() != model.group(e->value.degree).rank()) {
      out.push_back({"ShapeViolation", where, "value coefficient count mismatch"});
      continue;
    }
    if (e->value != normalize(model, e->value)) {
      out.push_back({"ShapeViolation", where, "value is not normalized"});
      continue;
    }

    // graded symmetry against the mirrored entry (absent mirror = zero)
    {
      const auto* m = model.brackets.find(e->b, e->a);
      PiElement mirrored = m ? m->value : zero_element(model, p + q - 1);
      PiElement expected = element_scale(model, parity_sign(static_cast<long long>(p) * q),
                                         normalize(model, e->value));
      if (mirrored.coeffs.size() == expected.coeffs.size() && mirrored != expected)
        out.push_back({"SymmetryViolation", where,
                       "mirror entry must equal (-1)^(pq) times this entry"});
    }

    // self-brackets in odd degree are 2-torsion
    if (p == q && e->a.index == e->b.index && p % 2 != 0) {
      PiElement doubled = element_scale(model, 2, normalize(model, e->value));
      if (!doubled.is_zero())
        out.push_back({"SelfBracketTorsionViolation", where,
                       "2 * [x,x] must vanish for x of odd degree"});
    }

    // bilinearity forces the entry's order to divide both generator orders
    {
      const long long da = model.group(p).orders()[static_cast<std::size_t>(e->a.index)];
      const long long db = model.group(q).orders()[static_cast<std::size_t>(e->b.index)];
      const Int g = gcd(Int(da), Int(db));
      if (g != 0) {
        auto ord = element_order(model, normalize(model, e->value));
        if (!ord.has_value() || g % *ord != 0)
          out.push_back({"TorsionViolation", where,
                         "entry order must divide gcd of the generator orders"});
      }
    }
  }
  return out;
}

}  // namespace foxcohen
