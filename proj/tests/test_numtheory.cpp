#include <doctest.h>

#include <numeric>
#include <set>

#include "sl2q/numtheory.hpp"

using namespace sl2q;

TEST_CASE("factor_prime_power classifies q") {
  PrimePower a = factor_prime_power(49);
  CHECK(a.p == 7);
  CHECK(a.m == 2);
  CHECK(!a.even);
  CHECK(a.mod4 == 1);
  CHECK(a.square);

  PrimePower b = factor_prime_power(27);
  CHECK(b.p == 3);
  CHECK(b.m == 3);
  CHECK(!b.even);
  CHECK(b.mod4 == 3);
  CHECK(!b.square);

  PrimePower c = factor_prime_power(4);
  CHECK(c.p == 2);
  CHECK(c.m == 2);
  CHECK(c.even);

  CHECK_THROWS_AS(factor_prime_power(12), NotPrimePower);
  CHECK_THROWS_AS(factor_prime_power(3), QTooSmall);
  CHECK_THROWS_AS(factor_prime_power(1), NotPrimePower);
}

TEST_CASE("euler_phi and tau spot values") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(14) == 6);
  CHECK(tau(1) == 1);
  CHECK(tau(8) == 4);
  CHECK(tau(10) == 4);
}

TEST_CASE("euler_phi and tau match direct enumeration up to 10^4") {
  for (std::int64_t n = 1; n <= 10000; ++n) {
    std::int64_t phi = 0, divs = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
      if (std::gcd(k, n) == 1) ++phi;
      if (n % k == 0) ++divs;
    }
    REQUIRE(euler_phi(n) == phi);
    REQUIRE(tau(n) == divs);
  }
}

TEST_CASE("divisors are ascending and counted by tau") {
  CHECK(divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
  CHECK(divisors(14) == std::vector<std::int64_t>{1, 2, 7, 14});
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  for (std::int64_t n = 1; n <= 500; ++n) {
    auto d = divisors(n);
    CHECK(static_cast<std::int64_t>(d.size()) == tau(n));
    CHECK(std::is_sorted(d.begin(), d.end()));
  }
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(1) == 1);
  CHECK(squarefree_part(-4) == -1);
  CHECK(squarefree_part(18) == 2);
  CHECK(squarefree_part(-49) == -1);
  CHECK(squarefree_part(-27) == -3);
  CHECK(squarefree_part(45) == 5);
}

TEST_CASE("legendre_symbol") {
  CHECK(legendre_symbol(3, 5) == -1);
  CHECK(legendre_symbol(0, 7) == 0);
  CHECK(legendre_symbol(4, 7) == 1);
  CHECK_THROWS_AS(legendre_symbol(1, 2), PNotOddPrime);
  CHECK_THROWS_AS(legendre_symbol(1, 15), PNotOddPrime);
}

TEST_CASE("legendre_symbol is multiplicative for p <= 97") {
  for (std::int64_t p = 3; p <= 97; p += 2) {
    if (!is_prime(p)) continue;
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b)
        REQUIRE(legendre_symbol(a, p) * legendre_symbol(b, p) ==
                legendre_symbol(a * b, p));
  }
}

TEST_CASE("hilbert_symbol local values") {
  Place inf = Place::infinite_place();
  CHECK(hilbert_symbol(-1, -1, inf) == -1);
  CHECK(hilbert_symbol(-1, -7, Place::at(7)) == -1);
  CHECK(hilbert_symbol(-1, -7, Place::at(3)) == 1);
  CHECK(hilbert_symbol(-1, -1, Place::at(2)) == -1);
  // omega(u) = (u^2-1)/8 path: (2,5) must ramify at 2 to balance (2/5) = -1.
  CHECK(hilbert_symbol(2, 5, Place::at(5)) == -1);
  CHECK(hilbert_symbol(2, 5, Place::at(2)) == -1);
  CHECK(hilbert_symbol(mpq_class(1, 2), mpq_class(5), Place::at(2)) ==
        hilbert_symbol(2, 5, Place::at(2)));
}

TEST_CASE("ramified_places spot values") {
  auto r1 = ramified_places(-1, -7);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == Place::at(7));
  CHECK(r1[1] == Place::infinite_place());

  auto r2 = ramified_places(-3, -5);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == Place::at(5));
  CHECK(r2[1] == Place::infinite_place());

  CHECK(ramified_places(1, 5).empty());
}

TEST_CASE("product formula and even ramification for |a|,|b| <= 100") {
  for (std::int64_t a = -100; a <= 100; ++a) {
    if (a == 0) continue;
    for (std::int64_t b = -100; b <= 100; ++b) {
      if (b == 0) continue;
      auto places = ramified_places(a, b);
      REQUIRE(places.size() % 2 == 0);
    }
  }
}

TEST_CASE("(-1,-p) ramifies at {p,oo} exactly when p = 3 (mod 4)") {
  for (std::int64_t p = 3; p <= 200; p += 2) {
    if (!is_prime(p)) continue;
    auto places = ramified_places(-1, -p);
    if (p % 4 == 3) {
      REQUIRE(places ==
              std::vector<Place>{Place::at(p), Place::infinite_place()});
    } else {
      // still a division algebra, but ramified at {2, oo}: not the {p, oo} one
      REQUIRE(places ==
              std::vector<Place>{Place::at(2), Place::infinite_place()});
    }
  }
}

TEST_CASE("find_ell") {
  CHECK(find_ell(5) == 3);
  CHECK(find_ell(13) == 7);
  CHECK(find_ell(17) == 3);
  CHECK_THROWS_AS(find_ell(7), std::invalid_argument);   // 7 = 3 (mod 4)
  CHECK_THROWS_AS(find_ell(15), std::invalid_argument);  // not prime
  CHECK_THROWS_AS(find_ell(13, 5), SearchExhausted);
}
