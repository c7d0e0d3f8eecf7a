#pragma once

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "foxcohen/catalog.hpp"
#include "foxcohen/cohen.hpp"
#include "foxcohen/fox.hpp"
#include "foxcohen/numtheory.hpp"
#include "foxcohen/pi.hpp"
#include "foxcohen/torus.hpp"

namespace foxcohen {

struct CheckResult {
  int id = 0;
  std::string module;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace verify_detail {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& msg) {
    if (ok) detail << msg;  // keep the first failure
    ok = false;
  }
  template <typename A, typename B>
  void equal(const A& a, const B& b, const std::string& what) {
    if (!(a == b)) {
      std::ostringstream os;
      os << what << ": " << a << " != " << b;
      fail(os.str());
    }
  }
  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

inline SpaceModel comm_test_model(int s, int t) {
  SpaceModel m;
  m.name = "CommTest(" + std::to_string(s) + "," + std::to_string(t) + ")";
  m.truncation = s + t + 1;
  const int p = s + 1, q = t + 1, out = s + t + 1;
  if (s == t) {
    m.groups.emplace(p, FgAbelianGroup({0, 0}));
    m.groups.emplace(out, FgAbelianGroup({0}));
    m.brackets.set({p, 0}, {p, 1}, PiElement{out, {Int(1)}});
    m.brackets.set({p, 1}, {p, 0},
                   PiElement{out, {Int(parity_sign(static_cast<long long>(p) * p))}});
  } else {
    m.groups.emplace(p, FgAbelianGroup({0}));
    m.groups.emplace(q, FgAbelianGroup({0}));
    m.groups.emplace(out, FgAbelianGroup({0}));
    m.brackets.set({p, 0}, {q, 0}, PiElement{out, {Int(1)}});
    m.brackets.set({q, 0}, {p, 0},
                   PiElement{out, {Int(parity_sign(static_cast<long long>(p) * q))}});
  }
  return m;
}

// groups only in degrees >= 2n, one nonzero bracket landing at degree 4n-1
inline SpaceModel connectivity_model(int n) {
  SpaceModel m;
  m.name = "Conn" + std::to_string(2 * n);
  m.truncation = 4 * n - 1;
  m.groups.emplace(2 * n, FgAbelianGroup({0, 0}));
  m.groups.emplace(4 * n - 1, FgAbelianGroup({0}));
  m.brackets.set({2 * n, 0}, {2 * n, 1}, PiElement{4 * n - 1, {Int(1)}});
  m.brackets.set({2 * n, 1}, {2 * n, 0},
                 PiElement{4 * n - 1, {Int(parity_sign(4LL * n * n))}});
  return m;
}

inline CohenElement random_element(const SpaceModel& model, int level, std::mt19937& rng) {
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
}

using CheckFn = std::function<void(Check&)>;

inline CheckResult run_one(int id, const std::string& module, const std::string& name,
                           const CheckFn& fn) {
  Check c;
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  return CheckResult{id, module, name, c.ok, c.detail.str()};
}

// ---- criterion bodies -------------------------------------------------

inline void c1_phi_oracle_agreement(Check& c) {
  FoxTable table;
  for (int k = 1; k <= 16; ++k)
    for (int l = 1; l <= k; ++l) {
      const Int brute = phi_bruteforce(l, k);
      const Int rec = table.phi(l, k);
      const Int closed = phi_closed(l, k);
      if (brute != rec || rec != closed) {
        std::ostringstream os;
        os << "phi(" << l << "," << k << "): bruteforce=" << brute << " recurrence=" << rec
           << " closed=" << closed;
        c.fail(os.str());
        return;
      }
    }
}

inline void c2_phi_identities(Check& c) {
  FoxTable table(401);
  for (int k = 1; k <= 200; ++k) {
    for (int l = 1; l <= 2 * k; l += 2) {
      c.equal(table.phi(l, 2 * k), Int(0), "parity phi(odd, even) recurrence");
      c.equal(phi_closed(l, 2 * k), Int(0), "parity phi(odd, even) closed");
    }
    for (int l = 0; l <= 2 * k; l += 2) {
      c.equal(table.phi(l, 2 * k), table.phi(l, 2 * k + 1), "stability phi(l,2k)=phi(l,2k+1)");
      if (l >= 2)
        c.equal(phi_closed(l, 2 * k), phi_closed(l, 2 * k + 1), "stability (closed)");
      c.equal(table.phi(l + 1, 2 * k + 1), Int(-table.phi(l, 2 * k + 1)),
              "alternation phi(l+1,2k+1) = -phi(l,2k+1)");
      if (l >= 2)
        c.equal(phi_closed(l + 1, 2 * k + 1), Int(-phi_closed(l, 2 * k + 1)),
                "alternation (closed)");
    }
    for (int l = 1; l <= k; ++l) {
      if (l < k)
        c.equal(table.phi(2 * l, 2 * k),
                Int(table.phi(2 * l, 2 * k - 2) + table.phi(2 * l - 2, 2 * k - 2)),
                "even-even recursion");
      c.equal(table.phi(2 * l, 2 * k), Int(-binomial(k, l)), "phi(2l,2k) = -C(k,l) recurrence");
      c.equal(phi_closed(2 * l, 2 * k), Int(-binomial(k, l)), "phi(2l,2k) = -C(k,l) closed");
    }
    if (!c.ok) return;
  }
}

inline void c3_delta_phi_linkage(Check& c) {
  for (long long n = 1; n <= 40; ++n)
    for (long long m = 1; m <= 40; ++m) {
      Int diff = phi_closed(static_cast<int>(n), static_cast<int>(n + m - 1)) -
                 parity_sign((n + 1) * (m + 1)) *
                     phi_closed(static_cast<int>(m), static_cast<int>(n + m - 1));
      if (diff < 0) diff = -diff;
      c.equal(delta(n, m).value, diff, "delta(" + std::to_string(n) + "," + std::to_string(m) +
                                           ") vs |phi difference|");
      if (!c.ok) return;
    }
}

inline void c4_s2_product_rule(Check& c) {
  const SpaceModel m = catalog_model("S2@4");
  auto elem = [&](long long a1, long long a2) {
    CohenElement e = cohen_identity(m, 2);
    e.coord(2).coeffs[0] = a1;
    e.coord(3).coeffs[0] = a2;
    return e;
  };
  for (long long a1 = -20; a1 <= 20; ++a1)
    for (long long a2 = -20; a2 <= 20; ++a2) {
      const CohenElement x = elem(a1, a2);
      for (long long b1 = -20; b1 <= 20; ++b1)
        for (long long b2 = -20; b2 <= 20; ++b2) {
          CohenElement prod = multiply(m, x, elem(b1, b2));
          if (prod.coord(2).coeffs[0] != a1 + b1 ||
              prod.coord(3).coeffs[0] != a2 + b2 + 2 * a1 * b1) {
            std::ostringstream os;
            os << "product rule failed at (" << a1 << "," << a2 << ")#(" << b1 << "," << b2 << ")";
            c.fail(os.str());
            return;
          }
        }
    }
  // (m, n) -> (m, m(m-1)+n) turns coordinatewise addition into the product
  auto h = [&](long long mm, long long nn) { return elem(mm, mm * (mm - 1) + nn); };
  for (long long m1 = -20; m1 <= 20; ++m1)
    for (long long n1 = -20; n1 <= 20; ++n1) {
      const CohenElement x = h(m1, n1);
      for (long long m2 = -20; m2 <= 20; ++m2)
        for (long long n2 = -20; n2 <= 20; ++n2) {
          if (!(multiply(m, x, h(m2, n2)) == h(m1 + m2, n1 + n2))) {
            std::ostringstream os;
            os << "homomorphism failed at (" << m1 << "," << n1 << ")+(" << m2 << "," << n2 << ")";
            c.fail(os.str());
            return;
          }
        }
    }
}

inline void c5_m3_enumeration(Check& c) {
  const SpaceModel m = catalog_model("M3@3");
  GroupEnumeration e = enumerate_group(m, 2);
  c.equal(e.elements.size(), std::size_t{8}, "element count");
  c.equal(e.order_census[Int(1)], 1LL, "census[1]");
  c.equal(e.order_census[Int(2)], 3LL, "census[2]");
  c.equal(e.order_census[Int(4)], 4LL, "census[4]");
  c.require(e.order_census.count(Int(8)) == 0, "no element of order 8");
}

inline void c6_m7_torsion_order(Check& c) {
  const SpaceModel m = catalog_model("M7reduced@11");
  CohenElement alpha = cohen_element(m, 10, {{6, {Int(1)}}});
  ElementOrder o = order(m, alpha, 64);
  if (o.kind != ElementOrder::Kind::Finite || o.value != 4) {
    std::ostringstream os;
    os << "expected order 4 for the degree-6 slot at level 10; computed order ";
    if (o.kind == ElementOrder::Kind::Finite)
      os << o.value;
    else
      os << "(not finite within bound)";
    os << "; the squaring coefficient phi(5,9) = " << phi_closed(5, 9)
       << " is even and annihilates the order-2 bracket";
    c.fail(os.str());
  }
}

inline void c7_s4_non_abelian_and_1stem(Check& c) {
  AbelianReport rep = is_abelian(catalog_model("S4reduced@8"), 7);
  c.require(!rep.abelian, "S4reduced@8 level 7 must be non-abelian");
  c.require(rep.witness.has_value() && rep.witness->first == GenRef{4, 0} &&
                rep.witness->second == GenRef{5, 0},
            "witness must be the (degree 4, gen 0), (degree 5, gen 0) pair");
  for (long long n = 1; n <= 64; ++n) {
    const bool lhs = j4n_minus1_abelian(n);
    c.equal(lhs, !is_power_of_two(n), "j4n_minus1_abelian vs power of 2 at n=" + std::to_string(n));
    c.equal(lhs, commutes_by_degree(2 * n - 1, 2 * n, BracketOrder::finite(2)),
            "j4n_minus1_abelian vs commutes_by_degree at n=" + std::to_string(n));
    if (!c.ok) return;
  }
}

inline void c8_3stem_criteria(Check& c) {
  c.equal(j4n_plus1_abelian(29), false, "n=29");
  c.equal(j4n_plus1_abelian(34), true, "n=34");
  for (long long n = 1; n <= 1000; ++n) {
    if (is_power_of_two(n)) continue;
    c.equal(j4n_plus1_abelian_digits(n), j4n_plus1_abelian(n),
            "digit form vs divisibility at n=" + std::to_string(n));
    if (!c.ok) return;
  }
}

inline void c9_catalan_criteria(Check& c) {
  Int cat = 1;                     // C_0
  Int binom_2n_nm1 = 0;            // C(0,-1)
  for (long long n = 0; n <= 3000; ++n) {
    if (n > 0) {
      cat *= 2 * (2 * (n - 1) + 1);
      cat /= n + 1;                // exact: now C_n
      if (n == 1) {
        binom_2n_nm1 = 1;          // C(2,0)
      } else {
        // C(2n, n-1) from C(2n-2, n-2) by the exact ratio (2n)(2n-1)/((n-1)(n+1))
        binom_2n_nm1 *= 2 * n * (2 * n - 1);
        const Int den = Int(n - 1) * Int(n + 1);
        if (binom_2n_nm1 % den != 0) {
          c.fail("binomial recurrence lost exactness at n=" + std::to_string(n));
          return;
        }
        binom_2n_nm1 /= den;
      }
    }
    c.equal(cat % 3 != 0, in_Tstar01(n + 1),
            "3-divisibility digit criterion at n=" + std::to_string(n));
    if (n >= 1)
      c.equal(binom_2n_nm1, Int(n * cat), "C(2n,n-1) = n*C_n at n=" + std::to_string(n));
    if (n <= 500 || n == 2000 || n == 3000) {
      c.equal(catalan(n), cat, "catalan op at n=" + std::to_string(n));
      if (n >= 1)
        c.equal(binomial(2 * n, n - 1), binom_2n_nm1, "binomial op at n=" + std::to_string(n));
    }
    if (!c.ok) return;
  }
}

inline void c10_torus_commutators(Check& c) {
  // all subsets pairs of {1..8} with |a| + |b| <= 8
  std::vector<IndexSet> subsets;
  for (unsigned mask = 1; mask < 256; ++mask) {
    std::vector<int> xs;
    for (int bit = 0; bit < 8; ++bit)
      if (mask & (1u << bit)) xs.push_back(bit + 1);
    subsets.emplace_back(std::move(xs));
  }
  long long disjoint_pairs = 0, overlapping_pairs = 0;
  for (const auto& a : subsets)
    for (const auto& b : subsets) {
      if (a.size() + b.size() > 8) continue;
      const SpaceModel m = comm_test_model(a.size(), b.size());
      const int p = a.size() + 1, q = b.size() + 1;
      PiElement alpha = element_make(m, p, [&] {
        std::vector<Int> v(m.group(p).rank(), Int(0));
        v[0] = 1;
        return v;
      }());
      PiElement beta = element_make(m, q, [&] {
        std::vector<Int> v(m.group(q).rank(), Int(0));
        v[a.size() == b.size() ? 1 : 0] = 1;
        return v;
      }());
      TauElement x = embed(m, alpha, a, 8);
      TauElement y = embed(m, beta, b, 8);
      TauElement comm = tau_commutator(m, x, y);
      if (a.disjoint(b)) {
        ++disjoint_pairs;
        TauElement expected = tau_identity(8);
        expected.set_slot(a.unite(b),
                          element_scale(m, fox_sign(a, b), bracket(m, alpha, beta)));
        if (!(comm == expected)) {
          c.fail("commutator mismatch for a disjoint pair of sizes " + std::to_string(a.size()) +
                 "," + std::to_string(b.size()));
          return;
        }
      } else {
        ++overlapping_pairs;
        if (!comm.is_identity()) {
          c.fail("overlapping supports must commute");
          return;
        }
      }
    }
  c.require(disjoint_pairs > 0 && overlapping_pairs > 0, "both branches must be exercised");
}

inline void c11_tau_multiplicities(Check& c) {
  auto mult8 = tau_multiplicities(8);
  c.equal(mult8.at(4), Int(35), "tau_8 copies of pi_4");
  c.equal(mult8.at(5), Int(35), "tau_8 copies of pi_5");
  c.equal(mult8.at(4), binomial(7, 3), "C(7,3)");
  c.equal(mult8.at(5), binomial(7, 4), "C(7,4)");
  // kernel of tau_5 -> tau_4 over the reduced 3-connected model: pi_5 + 3 pi_4
  auto ker5 = tau_kernel_multiplicities(5);
  c.equal(ker5.at(5), Int(1), "sigma_5");
  c.equal(ker5.at(4), Int(3), "sigma_4");
  const SpaceModel s4 = catalog_model("S4reduced@8");
  for (int d = 2; d <= 5; ++d) {
    const bool modeled = !s4.group(d).is_trivial();
    c.equal(modeled, d == 4 || d == 5, "nonzero degrees of the model below 6");
  }
}

inline void c12_group_axioms(Check& c) {
  std::mt19937 rng(20240817);
  long long triples = 0;
  for (const auto& name : catalog_names()) {
    const SpaceModel m = catalog_model(name);
    for (int level = 1; level <= m.truncation - 1; ++level) {
      const CohenElement e = cohen_identity(m, level);
      for (int rep = 0; rep < 350; ++rep) {
        CohenElement x = random_element(m, level, rng);
        CohenElement y = random_element(m, level, rng);
        CohenElement z = random_element(m, level, rng);
        ++triples;
        if (!(multiply(m, multiply(m, x, y), z) == multiply(m, x, multiply(m, y, z)))) {
          c.fail("associativity failed on " + m.name + " level " + std::to_string(level));
          return;
        }
        if (!(multiply(m, x, e) == x) || !(multiply(m, e, x) == x)) {
          c.fail("identity law failed on " + m.name);
          return;
        }
        if (!multiply(m, x, inverse(m, x)).is_identity() ||
            !multiply(m, inverse(m, x), x).is_identity()) {
          c.fail("inverse law failed on " + m.name);
          return;
        }
      }
      // top-degree slots are central
      for (int rep = 0; rep < 25; ++rep) {
        CohenElement top = cohen_identity(m, level);
        const auto& orders = m.group(level + 1).orders();
        for (std::size_t i = 0; i < orders.size(); ++i) {
          std::uniform_int_distribution<long long> dist(0, orders[i] == 0 ? 9 : orders[i] - 1);
          top.coord(level + 1).coeffs[i] = dist(rng);
        }
        CohenElement y = random_element(m, level, rng);
        if (!commutator(m, top, y).is_identity()) {
          c.fail("top-degree slot failed to be central on " + m.name);
          return;
        }
      }
      // projection is a homomorphism
      if (level >= 2)
        for (int rep = 0; rep < 25; ++rep) {
          CohenElement x = random_element(m, level, rng);
          CohenElement y = random_element(m, level, rng);
          if (!(project(m, multiply(m, x, y)) ==
                multiply(m, project(m, x), project(m, y)))) {
            c.fail("projection failed to be a homomorphism on " + m.name);
            return;
          }
        }
    }
  }
  // vanishing brackets degenerate to the direct product
  const SpaceModel zb = catalog_model("ZeroBracket@6");
  for (int level = 1; level <= zb.truncation - 1; ++level)
    for (int rep = 0; rep < 50; ++rep) {
      CohenElement x = random_element(zb, level, rng);
      CohenElement y = random_element(zb, level, rng);
      CohenElement prod = multiply(zb, x, y);
      for (int d = 2; d <= level + 1; ++d)
        if (!(prod.coord(d) == element_add(zb, x.coord(d), y.coord(d)))) {
          c.fail("zero-bracket product failed to be coordinatewise");
          return;
        }
    }
  c.require(triples >= 10000, "at least 10^4 random triples");
}

inline void c13_connectivity_window(Check& c) {
  for (int n : {2, 3}) {
    const SpaceModel m = connectivity_model(n);
    for (int level = 1; level <= 4 * n - 2; ++level) {
      AbelianReport rep = is_abelian(m, level);
      if (!rep.abelian) {
        c.fail("Conn" + std::to_string(2 * n) + " must be abelian at level " +
               std::to_string(level));
        return;
      }
    }
  }
  // the established catalog case: groups from degree 6 up, abelian through level 10
  const SpaceModel m7 = catalog_model("M7reduced@11");
  for (int level = 1; level <= 10; ++level)
    c.require(is_abelian(m7, level).abelian, "M7reduced@11 abelian at level " +
                                                 std::to_string(level));
}

}  // namespace verify_detail

/// Run the acceptance checks; `only_module` filters by module name when nonempty.
inline std::vector<CheckResult> run_acceptance(const std::string& only_module = "") {
  using namespace verify_detail;
  struct Item {
    int id;
    const char* module;
    const char* name;
    CheckFn fn;
  };
  const std::vector<Item> items = {
      {1, "fox", "phi oracle agreement (bruteforce = recurrence = closed, l <= k <= 16)",
       c1_phi_oracle_agreement},
      {2, "fox", "phi parity/stability/alternation/even-even/Gupta identities (k <= 200)",
       c2_phi_identities},
      {3, "numtheory", "delta table equals |phi(n,.) -+ phi(m,.)| (n,m <= 40)",
       c3_delta_phi_linkage},
      {4, "cohen", "S2@4 level-2 product rule and (m,n) |-> (m, m(m-1)+n) homomorphism",
       c4_s2_product_rule},
      {5, "cohen", "M3@3 level-2 enumeration: 8 elements, census {1:1,2:3,4:4}, no order 8",
       c5_m3_enumeration},
      {6, "cohen", "M7reduced@11 level 10: order of the degree-6 slot equals 4",
       c6_m7_torsion_order},
      {7, "cohen", "S4reduced@8 level 7 non-abelian with witness; 1-stem predicate (n <= 64)",
       c7_s4_non_abelian_and_1stem},
      {8, "numtheory", "3-stem predicate: digit form = divisibility form (n <= 1000)",
       c8_3stem_criteria},
      {9, "numtheory", "Catalan criteria: 3-divisibility digits and C(2n,n-1) = n*C_n (n <= 3000)",
       c9_catalan_criteria},
      {10, "torus", "embedded commutators carry fox_sign; overlapping supports commute (<= 8)",
       c10_torus_commutators},
      {11, "torus", "multiplicity bookkeeping: 35 copies in tau_8; kernel pi_5 + 3 pi_4 of tau_5",
       c11_tau_multiplicities},
      {12, "cohen", "group axioms on >= 10^4 random triples; centrality; projection; direct product",
       c12_group_axioms},
      {13, "cohen", "connectivity window: degrees >= 2n implies abelian through level 4n-2",
       c13_connectivity_window},
  };
  std::vector<CheckResult> out;
  for (const auto& item : items) {
    if (!only_module.empty() && only_module != item.module) continue;
    out.push_back(run_one(item.id, item.module, item.name, item.fn));
  }
  return out;
}

}  // namespace foxcohen
