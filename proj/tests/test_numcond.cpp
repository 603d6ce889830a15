#include "doctest.h"

#include "mukailat/numcond.hpp"
#include "oracles.hpp"

using namespace mukailat::numcond;

TEST_CASE("condition examples") {
  CHECK(satisfies_star(8));
  CHECK_FALSE(satisfies_star(6));
  CHECK(satisfies_star(14));
  CHECK_FALSE(satisfies_star(16));
  CHECK(satisfies_starstar(14));
  CHECK_FALSE(satisfies_starstar(8));
  CHECK_FALSE(satisfies_starstar(18));
  CHECK(satisfies_starstar(1));
  CHECK_THROWS_AS(satisfies_star(0), std::invalid_argument);
  CHECK_THROWS_AS(satisfies_starstar(-3), std::invalid_argument);
}

TEST_CASE("starstar agrees with divisor scan") {
  for (long d = 1; d <= 3000; ++d) CHECK(satisfies_starstar(d) == oracle::starstar(d));
}

TEST_CASE("a2 certificate examples") {
  CHECK(a2_certificate(14, 14) == A2Certificate{1, -2});
  CHECK_FALSE(a2_certificate(8, 8).has_value());
  // Norm 2 is taken at (0, +-1), (+-1, 0) and (1, 1), (-1, -1); the canonical
  // least is (0, 1).
  CHECK(a2_certificate(2, 2) == A2Certificate{0, 1});
  CHECK_FALSE(a2_certificate(15, 15).has_value());
  CHECK_FALSE(a2_certificate(14, 1).has_value());
}

TEST_CASE("a2 certificate agrees with box enumeration") {
  for (long d = 1; d <= 400; ++d) {
    const auto want = oracle::a2_certificate(d, d);
    const auto got = a2_certificate(d, d);
    REQUIRE(want.has_value() == got.has_value());
    if (got) {
      CHECK(got->x == want->first);
      CHECK(got->y == want->second);
    }
    const auto small = a2_certificate(d, 3);
    const auto small_want = oracle::a2_certificate(d, 3);
    CHECK(small.has_value() == small_want.has_value());
  }
}

TEST_CASE("primes and factorization") {
  for (long n = 0; n <= 5000; ++n) CHECK(is_prime(static_cast<std::uint64_t>(n)) == oracle::is_prime(n));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(18446744073709551555ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(factorize(360) == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(97) == std::vector<std::pair<std::int64_t, int>>{{97, 1}});
  CHECK(factorize(1).empty());
}
