#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "restrictlab/zmod.hpp"

using namespace restrictlab;

TEST_CASE("make_ring factors and classifies") {
  const auto r30 = make_ring(30);
  CHECK(r30.omega() == 3);
  CHECK(r30.squarefree());
  const std::vector<PrimePower> f30{{2, 1}, {3, 1}, {5, 1}};
  CHECK(std::vector<PrimePower>(r30.prime_factors().begin(), r30.prime_factors().end()) == f30);

  const auto r9 = make_ring(9);
  CHECK(r9.omega() == 1);
  CHECK_FALSE(r9.squarefree());
  CHECK(r9.prime_factors()[0] == PrimePower{3, 2});

  CHECK_THROWS_AS(make_ring(1), std::invalid_argument);
  CHECK_THROWS_AS(make_ring(0), std::invalid_argument);
  CHECK_THROWS_AS(make_ring(-7), std::invalid_argument);
}

TEST_CASE("ring invariants for every N up to 500") {
  for (std::int64_t n = 2; n <= 500; ++n) {
    const auto ring = make_ring(n);
    std::uint64_t product = 1;
    bool all_single = true;
    for (const auto& f : ring.prime_factors()) {
      for (int k = 0; k < f.multiplicity; ++k) product *= f.prime;
      all_single = all_single && f.multiplicity == 1;
    }
    CHECK(product == ring.modulus());
    CHECK(ring.omega() == oracle::omega(ring.modulus()));
    CHECK(ring.squarefree() == all_single);
    CHECK(ring.squarefree() == oracle::squarefree(ring.modulus()));
  }
}

TEST_CASE("crt_combine") {
  const std::vector<Congruence> a{{2, 3}, {3, 5}};
  CHECK(crt_combine(a) == 8);
  const std::vector<Congruence> zero{{0, 3}, {0, 5}};
  CHECK(crt_combine(zero) == 0);
  const std::vector<Congruence> bad{{1, 4}, {1, 6}};
  CHECK_THROWS_AS(crt_combine(bad), std::invalid_argument);
}

TEST_CASE("crt_combine inverts componentwise reduction") {
  std::mt19937_64 rng(11);
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::uint64_t> moduli;
    std::uint64_t product = 1;
    for (const auto p : primes) {
      std::uint64_t q = p;
      if (rng() % 3 == 0) q *= p;
      if (rng() % 2 == 0 && product * q <= 1000000) {
        moduli.push_back(q);
        product *= q;
      }
    }
    const std::uint64_t x = rng() % product;
    std::vector<Congruence> system;
    for (const auto m : moduli) system.push_back({x % m, m});
    REQUIRE(crt_combine(system) == x);
  }
}

TEST_CASE("square roots match a brute-force scan") {
  const auto r15 = make_ring(15);
  CHECK(square_roots_mod(4, r15) == std::vector<std::uint64_t>{2, 7, 8, 13});
  CHECK(square_roots_mod(0, r15) == std::vector<std::uint64_t>{0});
  CHECK(square_roots_mod(2, make_ring(5)).empty());

  CHECK(count_square_roots(4, r15) == 4);
  CHECK(count_square_roots(1, make_ring(101)) == 2);
  CHECK(count_square_roots(0, make_ring(30)) == 1);

  for (std::int64_t n = 2; n <= 200; ++n) {
    const auto ring = make_ring(n);
    if (!ring.squarefree()) continue;
    const std::uint64_t bound = std::uint64_t{1} << ring.omega();
    for (std::uint64_t c = 0; c < ring.modulus(); ++c) {
      const auto expected = oracle::square_roots(c, ring.modulus());
      REQUIRE(square_roots_mod(c, ring) == expected);
      REQUIRE(count_square_roots(c, ring) == expected.size());
      REQUIRE(expected.size() <= bound);
    }
  }
}

TEST_CASE("square roots modulo 2 and non-squarefree moduli") {
  CHECK(square_roots_mod_prime(0, 2) == std::vector<std::uint64_t>{0});
  CHECK(square_roots_mod_prime(1, 2) == std::vector<std::uint64_t>{1});
  const auto r9 = make_ring(9);
  CHECK(square_roots_mod(0, r9) == std::vector<std::uint64_t>{0, 3, 6});
  CHECK(count_square_roots(0, r9) == 3);
}

TEST_CASE("Tonelli-Shanks on large primes") {
  for (const std::uint64_t p : std::initializer_list<std::uint64_t>{67, 97, 193, 257, 7681, 65537, 1000003}) {
    for (std::uint64_t z : std::initializer_list<std::uint64_t>{1, 2, 5, 12345, p - 3}) {
      z %= p;
      const auto c = mul_mod(z, z, p);
      const auto roots = square_roots_mod_prime(c, p);
      REQUIRE(roots.size() == (c == 0 ? 1U : 2U));
      for (const auto r : roots) CHECK(mul_mod(r, r, p) == c);
      CHECK(std::find(roots.begin(), roots.end(), z) != roots.end());
    }
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(49) == std::vector<std::uint64_t>{1, 7, 49});
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
}
