#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "foxcohen/bigint.hpp"

namespace foxcohen {

/// C(n,k), exact; 0 whenever k < 0 or k > n.
inline Int binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int res = 1;
  for (long long i = 1; i <= k; ++i) {
    res *= (n - k + i);
    res /= i;  // exact: res is C(n-k+i, i) after this step
  }
  return res;
}

inline bool is_prime_small(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// C(n,k) mod p by multiplying binomials of base-p digit pairs.
inline long long binomial_mod_p(long long n, long long k, long long p) {
  if (!is_prime_small(p)) throw DomainError("binomial_mod_p: p must be prime");
  if (n < 0 || k < 0 || k > n) return 0;
  long long res = 1;
  while (n > 0 || k > 0) {
    const long long a = n % p, b = k % p;
    if (b > a) return 0;
    res = (res * static_cast<long long>(binomial(a, b))) % p;
    n /= p;
    k /= p;
  }
  return res;
}

/// True iff C(n,k) is odd: every binary digit of k must fit under n.
inline bool binomial_odd(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return false;
  return (n & k) == k;
}

/// n-th Catalan number by the exact iteration C_{m+1} = C_m * 2(2m+1)/(m+2).
inline Int catalan(long long n) {
  if (n < 0) throw DomainError("catalan: n must be nonnegative");
  Int c = 1;
  for (long long m = 0; m < n; ++m) {
    c *= 2 * (2 * m + 1);
    c /= (m + 2);  // exact
  }
  return c;
}

/// Order of a bracket: a positive integer or a distinguished infinite value.
class BracketOrder {
 public:
  static BracketOrder infinite() { return BracketOrder(std::nullopt); }
  static BracketOrder finite(Int k) {
    if (k < 1) throw DomainError("BracketOrder: order must be >= 1");
    return BracketOrder(std::optional<Int>(std::move(k)));
  }

  bool is_infinite() const { return !k_.has_value(); }
  const Int& value() const {
    if (!k_) throw DomainError("BracketOrder: infinite order has no value");
    return *k_;
  }

 private:
  explicit BracketOrder(std::optional<Int> k) : k_(std::move(k)) {}
  std::optional<Int> k_;
};

struct DeltaEntry {
  long long n = 0;
  long long m = 0;
  Int value;
};

// Parity table deciding when classes in pi_{n+1} and pi_{m+1} commute:
//   odd/odd -> 0, odd/even -> C((n+m-1)/2, m/2),
//   even/odd -> C((n+m-1)/2, n/2), even/even -> C((n+m)/2, n/2).
inline DeltaEntry delta(long long n, long long m) {
  if (n < 1 || m < 1) throw DomainError("delta: n, m must be >= 1");
  const bool n_odd = (n % 2 != 0), m_odd = (m % 2 != 0);
  Int value;
  if (n_odd && m_odd)
    value = 0;
  else if (n_odd)
    value = binomial((n + m - 1) / 2, m / 2);
  else if (m_odd)
    value = binomial((n + m - 1) / 2, n / 2);
  else
    value = binomial((n + m) / 2, n / 2);
  return DeltaEntry{n, m, std::move(value)};
}

/// Whether classes of the given degrees commute, given the order of their bracket.
inline bool commutes_by_degree(long long n, long long m, const BracketOrder& bracket_order) {
  if (n % 2 != 0 && m % 2 != 0) return true;
  if (bracket_order.is_infinite()) return false;
  return delta(n, m).value % bracket_order.value() == 0;
}

inline bool is_power_of_two(long long n) { return n >= 1 && (n & (n - 1)) == 0; }

/// True iff every base-3 digit of n above the units place is 0 or 1.
/// (The units digit is unconstrained; this is what controls 3 | C_{n-1}.)
inline bool in_Tstar01(long long n) {
  if (n < 0) return false;
  for (n /= 3; n > 0; n /= 3)
    if (n % 3 == 2) return false;
  return true;
}

inline bool j4n_minus1_abelian(long long n) { return !is_power_of_two(n); }

/// Divisibility form: 12 | n*C_n for n odd, 24 | n*C_n for n even.
inline bool j4n_plus1_abelian(long long n) {
  if (is_power_of_two(n)) throw DomainError("j4n_plus1_abelian: n must not be a power of 2");
  const long long order = (n % 2 != 0) ? 12 : 24;
  return (n * catalan(n)) % order == 0;
}

/// Digit-criteria form of the same predicate. The binary conditions
/// n != 2^a - 1 and n != 2^a + 2^b - 1 say exactly that n+1 has at least
/// three binary ones, i.e. 4 | C_n; that part is vacuous for even n.
inline bool j4n_plus1_abelian_digits(long long n) {
  if (is_power_of_two(n)) throw DomainError("j4n_plus1_abelian_digits: n must not be a power of 2");
  const bool three_divides = (n % 3 == 0) || !in_Tstar01(n + 1);
  if (n % 2 == 0) return three_divides;
  int ones = 0;
  for (long long v = n + 1; v > 0; v &= v - 1) ++ones;
  return ones >= 3 && three_divides;
}

struct StemReport {
  long long n = 0;
  Int delta_low;                        // Delta for the 1-stem pair: C(2n-1, n)
  Int delta_high;                       // Delta for the 3-stem pair: n*C_n
  bool j4nm1_abelian = false;
  std::optional<bool> j4np1_abelian;    // absent when n is a power of 2
};

inline StemReport stem_report(long long n) {
  if (n < 1) throw DomainError("stem_report: n must be >= 1");
  StemReport r;
  r.n = n;
  r.delta_low = delta(2 * n - 1, 2 * n).value;
  r.delta_high = n * catalan(n);
  r.j4nm1_abelian = j4n_minus1_abelian(n);
  if (!is_power_of_two(n)) r.j4np1_abelian = j4n_plus1_abelian(n);
  return r;
}

}  // namespace foxcohen
