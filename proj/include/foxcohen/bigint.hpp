#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace foxcohen {

// All arithmetic in this library is exact. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// fox_sign requires its two index sets to be disjoint.
struct DisjointnessError : DomainError {
  using DomainError::DomainError;
};

// Brute-force enumeration refuses arguments past its configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the torus product when the bracket table is not 2-step central.
struct ModelNotClass2 : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (-1)^e for any integer e, including negative exponents.
inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd(a, b);
  Int r = (a / g) * b;
  return r < 0 ? -r : r;
}

}  // namespace foxcohen
