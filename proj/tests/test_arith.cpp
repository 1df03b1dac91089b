// isospec - element-order spectra of finite symplectic and orthogonal groups

#include <random>

#include "catch_amalgamated.hpp"

#include "isospec/arith.hpp"

using isospec::Integer;

namespace {
  // Plain trial division; the oracle for small factorizations.
  std::map<Integer, unsigned> trial_division(std::uint64_t n) {
    std::map<Integer, unsigned> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      while (n % d == 0) {
        ++out[Integer(d)];
        n /= d;
      }
    }
    if (n > 1) {
      ++out[Integer(n)];
    }
    return out;
  }

  bool naive_is_prime(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("gcd_lcm examples", "[arith]") {
  using isospec::gcd_lcm;
  CHECK(gcd_lcm({4, 2}) == std::pair<Integer, Integer>(2, 4));
  CHECK(gcd_lcm({7, 9, 3}) == std::pair<Integer, Integer>(1, 63));
  Integer q = 2;
  CHECK(gcd_lcm({q * q + 1, q + 1}) == std::pair<Integer, Integer>(1, 15));
  CHECK_THROWS_AS(gcd_lcm(std::span<Integer const>{}), isospec::UsageError);
  CHECK_THROWS_AS(gcd_lcm({3, 0}), isospec::UsageError);
}

TEST_CASE("gcd times lcm is the product", "[arith][property]") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Integer a = rng() % 1000000 + 1, b = rng() % 1000000 + 1;
    CHECK(isospec::gcd(a, b) * isospec::lcm(a, b) == a * b);
  }
}

TEST_CASE("factorize examples", "[arith]") {
  using isospec::factorize;
  CHECK(factorize(255).factors
        == std::map<Integer, unsigned>{{3, 1}, {5, 1}, {17, 1}});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(59048).factors
        == std::map<Integer, unsigned>{{2, 3}, {11, 2}, {61, 1}});
  CHECK(factorize(59048).factors == trial_division(59048));
  CHECK_THROWS_AS(factorize(0), isospec::UsageError);
}

TEST_CASE("factorize agrees with trial division", "[arith][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    std::uint64_t n = rng() % 100000000 + 1;
    REQUIRE(isospec::factorize(n).factors == trial_division(n));
  }
}

TEST_CASE("factorize reassembles random 64-bit values", "[arith][property]") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    Integer a = rng() | 1u;
    auto    f = isospec::factorize(a);
    REQUIRE(f.reassemble() == a);
    for (auto const& [p, e] : f.factors) {
      REQUIRE(isospec::is_prime(p));
    }
  }
}

TEST_CASE("factorize beyond 64 bits", "[arith]") {
  // 9^32 + 1 = 2 * 1716841910146256242328924544641
  Integer a = isospec::ipow(9, 32) + 1;
  auto    f = isospec::factorize(a);
  CHECK(f.reassemble() == a);
  CHECK(f.factors
        == std::map<Integer, unsigned>{
            {2, 1}, {Integer("1716841910146256242328924544641"), 1}});
  // 157 bits with a 31-bit cofactor: the generic cpp_int rho path
  Integer m127 = isospec::ipow(2, 127) - 1;
  CHECK(isospec::factorize(m127 * 1073741827).factors
        == std::map<Integer, unsigned>{{1073741827, 1}, {m127, 1}});
  // product of two 40-bit primes: needs rho on the 80-bit path
  Integer p("1099511627791"), q("1099511628401");
  REQUIRE(isospec::is_prime(p));
  REQUIRE(isospec::is_prime(q));
  CHECK(isospec::factorize(p * q).factors
        == std::map<Integer, unsigned>{{p, 1}, {q, 1}});
  // squares of large primes
  CHECK(isospec::factorize(q * q).factors
        == std::map<Integer, unsigned>{{q, 2}});
}

TEST_CASE("is_prime against naive test and known values", "[arith]") {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    REQUIRE(isospec::is_prime(n) == naive_is_prime(n));
  }
  // strong pseudoprimes to several bases
  CHECK_FALSE(isospec::is_prime(Integer("3215031751")));
  CHECK_FALSE(isospec::is_prime(Integer("3825123056546413051")));
  CHECK_FALSE(isospec::is_prime(Integer("318665857834031151167461")));
  // Mersenne primes on both sides of the deterministic bound
  CHECK(isospec::is_prime(isospec::ipow(2, 61) - 1));
  CHECK(isospec::is_prime(isospec::ipow(2, 89) - 1));
  CHECK(isospec::is_prime(isospec::ipow(2, 127) - 1));
  CHECK_FALSE(isospec::is_prime(isospec::ipow(2, 67) - 1));
  CHECK_FALSE(isospec::is_prime((isospec::ipow(2, 89) - 1)
                                * (isospec::ipow(2, 107) - 1)));
}

TEST_CASE("r_part", "[arith]") {
  using isospec::r_part;
  CHECK(r_part(48, 2) == 16);
  CHECK(r_part(49, 7) == 49);
  Integer q = 3;
  CHECK(r_part(q * q - 1, 2) == 8);
  CHECK_THROWS_AS(r_part(48, 4), isospec::UsageError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    Integer a = rng() % 1000000 + 1;
    for (int r : {2, 3, 5, 7}) {
      Integer part = r_part(a, r);
      REQUIRE(a % part == 0);
      REQUIRE(isospec::gcd(a / part, r) == 1);
    }
  }
}

TEST_CASE("mult_order", "[arith]") {
  using isospec::mult_order;
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(3, 61) == 10);
  CHECK(mult_order(4, 13) == 6);
  CHECK_THROWS_AS(mult_order(6, 3), isospec::UsageError);
  CHECK_THROWS_AS(mult_order(2, 9), isospec::UsageError);

  // brute force and Fermat divisibility
  for (std::uint64_t r = 3; r < 400; ++r) {
    if (!naive_is_prime(r)) {
      continue;
    }
    for (std::uint64_t q = 2; q < 30; ++q) {
      if (q % r == 0) {
        continue;
      }
      std::uint64_t e = 1, x = q % r;
      while (x != 1) {
        x = x * q % r;
        ++e;
      }
      Integer got = mult_order(q, r);
      REQUIRE(got == e);
      REQUIRE((r - 1) % e == 0);
      REQUIRE(isospec::has_mult_order(q, r, e));
      if (e > 1) {
        REQUIRE_FALSE(isospec::has_mult_order(q, r, e - 1));
      }
    }
  }
}

TEST_CASE("prime_power", "[arith]") {
  CHECK(isospec::prime_power(27) == std::pair<Integer, unsigned>(3, 3));
  CHECK(isospec::prime_power(2) == std::pair<Integer, unsigned>(2, 1));
  CHECK_FALSE(isospec::prime_power(12).has_value());
  CHECK_FALSE(isospec::prime_power(1).has_value());
}
