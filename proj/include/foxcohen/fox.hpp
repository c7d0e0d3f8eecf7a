#pragma once

#include <algorithm>
#include <compare>
#include <deque>
#include <initializer_list>
#include <mutex>
#include <vector>

#include "foxcohen/bigint.hpp"
#include "foxcohen/numtheory.hpp"

namespace foxcohen {

/// A finite set of positive integers, stored sorted ascending without duplicates.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> xs) : IndexSet(std::vector<int>(xs)) {}
  explicit IndexSet(std::vector<int> xs) : elems_(std::move(xs)) {
    for (int x : elems_)
      if (x < 1) throw DomainError("IndexSet: elements must be >= 1");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  const std::vector<int>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  bool contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }
  int max() const { return elems_.empty() ? 0 : elems_.back(); }

  bool disjoint(const IndexSet& other) const {
    auto i = elems_.begin();
    auto j = other.elems_.begin();
    while (i != elems_.end() && j != other.elems_.end()) {
      if (*i < *j)
        ++i;
      else if (*j < *i)
        ++j;
      else
        return false;
    }
    return true;
  }

  IndexSet unite(const IndexSet& other) const {
    std::vector<int> out;
    out.reserve(elems_.size() + other.elems_.size());
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                   std::back_inserter(out));
    IndexSet r;
    r.elems_ = std::move(out);
    return r;
  }

  auto operator<=>(const IndexSet&) const = default;

 private:
  std::vector<int> elems_;
};

/// w(a,b) = #{(i,j) : i in a, j in b, j < i}.
inline long long inversion_count(const IndexSet& a, const IndexSet& b) {
  long long w = 0;
  for (int i : a.elements())
    for (int j : b.elements())
      if (j < i) ++w;
  return w;
}

/// The sign (-1)^(w + |a| - 1) attached to an ordered disjoint pair (a, b).
inline int fox_sign(const IndexSet& a, const IndexSet& b) {
  if (a.empty()) throw DomainError("fox_sign: a must be nonempty");
  if (!a.disjoint(b)) throw DisjointnessError("fox_sign: a and b must be disjoint");
  return parity_sign(inversion_count(a, b) + a.size() - 1);
}

inline constexpr int kPhiBruteforceBudget = 24;

// Sum of fox signs over all l-subsets a of {1..k}, counted against the
// complement. Subsets are walked in lexicographic order; w by direct pair
// counting. This is the oracle for the other two evaluation routes.
// Boundary: for l = 0 the single (empty-set) term is (-1)^(0+0-1) = -1.
inline Int phi_bruteforce(int l, int k, int budget_k = kPhiBruteforceBudget) {
  if (l < 0 || k < 1 || l > k) throw DomainError("phi_bruteforce: need 0 <= l <= k, k >= 1");
  if (k > budget_k) throw BudgetExceeded("phi_bruteforce: k exceeds enumeration budget");
  if (l == 0) return -1;

  std::vector<int> a(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) a[static_cast<std::size_t>(i)] = i + 1;

  Int total = 0;
  for (;;) {
    long long w = 0;
    {
      // b = {1..k} \ a; count pairs (i in a, j in b, j < i) by scanning.
      std::size_t ai = 0;
      for (int j = 1; j <= k; ++j) {
        if (ai < a.size() && a[ai] == j) {
          ++ai;
          continue;
        }
        w += static_cast<long long>(a.size() - ai);  // elements of a above j
      }
    }
    total += parity_sign(w + l - 1);

    // next combination, lexicographic
    int i = l - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == k - (l - 1 - i)) --i;
    if (i < 0) break;
    ++a[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < l; ++t)
      a[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(t - 1)] + 1;
  }
  return total;
}

/// Four-case closed form, defined for 1 <= l <= k.
inline Int phi_closed(int l, int k) {
  if (l < 1 || l > k) throw DomainError("phi_closed: need 1 <= l <= k");
  const bool l_even = (l % 2 == 0), k_even = (k % 2 == 0);
  if (l_even && k_even) return -binomial(k / 2, l / 2);
  if (!l_even && k_even) return 0;
  if (!l_even && !k_even) return binomial((k - 1) / 2, (l - 1) / 2);
  return -binomial((k - 1) / 2, l / 2);
}

// Memoized values of phi via the recurrence
//   phi(l,k) = (-1)^(k-l+1) phi(l-1,k-1) + phi(l,k-1),  k > l > 0,
// with boundaries phi(0,k) = -1 and phi(k,k) = (-1)^(k-1) (the values the
// subset-sum definition actually takes). Rows are filled on demand, in order,
// so a shared table is deterministic; growth is guarded by a mutex.
class FoxTable {
 public:
  explicit FoxTable(int max_k = 0) {
    if (max_k < 0) throw DomainError("FoxTable: max_k must be nonnegative");
    if (max_k > 0) ensure(max_k);
  }

  Int phi(int l, int k) const {
    if (l < 0 || k < 1 || l > k) throw DomainError("FoxTable: need 0 <= l <= k, k >= 1");
    std::lock_guard<std::mutex> lock(mu_);
    ensure(k);
    return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
  }

  int max_k() const {
    std::lock_guard<std::mutex> lock(mu_);
    return static_cast<int>(rows_.size()) - 1;
  }

 private:
  void ensure(int k) const {
    if (rows_.empty()) rows_.push_back({});  // row 0 unused
    for (int kk = static_cast<int>(rows_.size()); kk <= k; ++kk) {
      std::vector<Int> row(static_cast<std::size_t>(kk) + 1);
      row[0] = -1;
      row[static_cast<std::size_t>(kk)] = parity_sign(kk - 1);
      const auto& prev = rows_.back();
      for (int l = 1; l < kk; ++l)
        row[static_cast<std::size_t>(l)] =
            parity_sign(kk - l + 1) * prev[static_cast<std::size_t>(l - 1)] +
            prev[static_cast<std::size_t>(l)];
      rows_.push_back(std::move(row));
    }
  }

  mutable std::mutex mu_;
  mutable std::deque<std::vector<Int>> rows_;  // rows_[k][l]; deque keeps rows stable
};

/// Recurrence evaluation with a fresh table; use FoxTable directly for bulk work.
inline Int phi_recurrence(int l, int k) { return FoxTable().phi(l, k); }

}  // namespace foxcohen
