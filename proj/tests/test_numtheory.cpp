#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "foxcohen/fox.hpp"
#include "foxcohen/numtheory.hpp"

using namespace foxcohen;

TEST_CASE("binomial basics") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(4, 1) == 4);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(60, 30) == Int("118264581564861424"));
}

TEST_CASE("binomial_mod_p pinned values") {
  CHECK(binomial_mod_p(7, 3, 2) == 1);
  CHECK(binomial_mod_p(5, 3, 2) == 0);
  CHECK(binomial_mod_p(12, 0, 5) == 1);
  CHECK_THROWS_AS(binomial_mod_p(5, 2, 4), DomainError);
  CHECK_THROWS_AS(binomial_mod_p(5, 2, 1), DomainError);
}

TEST_CASE("binomial_mod_p agrees with the exact binomial below 2000") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> dist(0, 2000);
  for (int rep = 0; rep < 300; ++rep) {
    long long n = dist(rng), k = dist(rng);
    for (long long p : {2, 3, 5, 7}) {
      const Int exact = binomial(n, k) % p;
      CHECK(binomial_mod_p(n, k, p) == exact);
    }
  }
}

TEST_CASE("binomial_mod_p satisfies the digit-peeling identity up to 10^6") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long long> dist(0, 1000000);
  for (int rep = 0; rep < 300; ++rep) {
    long long n = dist(rng), k = dist(rng);
    for (long long p : {2, 3, 5, 7}) {
      const long long whole = binomial_mod_p(n, k, p);
      const long long peeled =
          (binomial_mod_p(n % p, k % p, p) * binomial_mod_p(n / p, k / p, p)) % p;
      CHECK(whole == peeled);
    }
  }
}

TEST_CASE("binomial_odd matches the mod-2 route") {
  CHECK(binomial_odd(3, 2));
  CHECK_FALSE(binomial_odd(5, 3));
  CHECK(binomial_odd(11, 11));
  for (long long n = 0; n <= 64; ++n)
    for (long long k = 0; k <= n; ++k)
      CHECK(binomial_odd(n, k) == (binomial_mod_p(n, k, 2) == 1));
}

TEST_CASE("catalan values and identities") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(2) == 2);
  CHECK(catalan(2) == binomial(4, 2) / 3);
  CHECK(2 * catalan(2) == binomial(4, 1));
  const Int c29 = catalan(29);
  CHECK(c29 % 4 == 0);
  CHECK(c29 % 3 != 0);
  for (long long n = 1; n <= 300; ++n) CHECK(binomial(2 * n, n - 1) == n * catalan(n));
}

TEST_CASE("delta pinned values") {
  CHECK(delta(1, 1).value == 0);
  CHECK(delta(3, 4).value == 3);
  CHECK(delta(3, 6).value == 4);
  CHECK(delta(3, 6).value == 2 * catalan(2));
  CHECK_THROWS_AS(delta(0, 1), DomainError);
}

TEST_CASE("delta is symmetric and vanishes exactly on odd pairs") {
  for (long long n = 1; n <= 64; ++n)
    for (long long m = 1; m <= 64; ++m) {
      const DeltaEntry e = delta(n, m);
      CHECK(e.value == delta(m, n).value);
      CHECK((e.value == 0) == (n % 2 != 0 && m % 2 != 0));
    }
}

TEST_CASE("delta equals the absolute phi difference") {
  for (long long n = 1; n <= 12; ++n)
    for (long long m = 1; m <= 12; ++m) {
      Int diff = phi_closed(static_cast<int>(n), static_cast<int>(n + m - 1)) -
                 parity_sign((n + 1) * (m + 1)) *
                     phi_closed(static_cast<int>(m), static_cast<int>(n + m - 1));
      if (diff < 0) diff = -diff;
      CHECK(delta(n, m).value == diff);
    }
}

TEST_CASE("commutes_by_degree") {
  CHECK(commutes_by_degree(1, 1, BracketOrder::infinite()));
  CHECK_FALSE(commutes_by_degree(3, 4, BracketOrder::finite(2)));
  CHECK(commutes_by_degree(5, 6, BracketOrder::finite(2)));  // delta = C(5,3) = 10
  CHECK_FALSE(commutes_by_degree(2, 2, BracketOrder::infinite()));
}

TEST_CASE("BracketOrder is a real value type") {
  CHECK(BracketOrder::infinite().is_infinite());
  CHECK(BracketOrder::finite(12).value() == 12);
  CHECK_THROWS_AS(BracketOrder::finite(0), DomainError);
  CHECK_THROWS_AS(BracketOrder::infinite().value(), DomainError);
}

TEST_CASE("is_power_of_two") {
  CHECK(is_power_of_two(4));
  CHECK_FALSE(is_power_of_two(6));
  CHECK(is_power_of_two(1));
  CHECK_FALSE(is_power_of_two(0));
}

TEST_CASE("in_Tstar01 constrains only digits above the units place") {
  CHECK_FALSE(in_Tstar01(35));  // 1022 base 3: a 2 above the units place
  CHECK(in_Tstar01(30));        // 1010 base 3
  CHECK(in_Tstar01(1));
  CHECK(in_Tstar01(2));         // units digit may be 2
  CHECK(in_Tstar01(5));         // 12 base 3
  CHECK_FALSE(in_Tstar01(7));   // 21 base 3
}

TEST_CASE("3-divisibility of Catalan numbers follows the digit rule") {
  Int c = 1;
  for (long long n = 0; n <= 300; ++n) {
    if (n > 0) {
      c *= 2 * (2 * (n - 1) + 1);
      c /= n + 1;
    }
    CHECK((c % 3 != 0) == in_Tstar01(n + 1));
  }
}

TEST_CASE("1-stem predicate matches both routes") {
  CHECK_FALSE(j4n_minus1_abelian(2));
  CHECK(j4n_minus1_abelian(3));  // C(5,3) = 10 is even
  CHECK_FALSE(j4n_minus1_abelian(1));
  const std::vector<bool> expected = {false, false, true, false, true,
                                      true,  true,  false, true, true};
  for (long long n = 1; n <= 10; ++n)
    CHECK(j4n_minus1_abelian(n) == expected[static_cast<std::size_t>(n - 1)]);
  for (long long n = 1; n <= 40; ++n)
    CHECK(j4n_minus1_abelian(n) ==
          commutes_by_degree(2 * n - 1, 2 * n, BracketOrder::finite(2)));
}

TEST_CASE("3-stem predicate pinned values and equivalence") {
  CHECK_FALSE(j4n_plus1_abelian(29));
  CHECK(j4n_plus1_abelian(34));
  CHECK_FALSE(j4n_plus1_abelian(3));  // 3*C_3 = 15
  CHECK_THROWS_AS(j4n_plus1_abelian(8), DomainError);
  CHECK_THROWS_AS(j4n_plus1_abelian_digits(16), DomainError);
  for (long long n = 1; n <= 200; ++n) {
    if (is_power_of_two(n)) continue;
    CHECK(j4n_plus1_abelian_digits(n) == j4n_plus1_abelian(n));
  }
}

TEST_CASE("stem_report fields") {
  const StemReport r3 = stem_report(3);
  CHECK(r3.delta_low == binomial(5, 3));
  CHECK(r3.delta_high == binomial(6, 2));
  CHECK(r3.delta_high == 3 * catalan(3));
  CHECK(r3.j4nm1_abelian);
  REQUIRE(r3.j4np1_abelian.has_value());
  CHECK_FALSE(*r3.j4np1_abelian);

  const StemReport r4 = stem_report(4);
  CHECK_FALSE(r4.j4nm1_abelian);
  CHECK_FALSE(r4.j4np1_abelian.has_value());  // power of 2: not applicable
}
