#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "apc/topology.hpp"

using namespace apc;

TEST_CASE("ell closed forms") {
  for (int n = 2; n <= 10; ++n)
    for (long p = 0; p <= 10; ++p)
      CHECK(ell(n, Triple(p, 1, 1)) == Int(p * n - (n + 1)));
  CHECK(ell(4, Triple(0, 1, 1)) == -5);
  CHECK(ell(2, Triple(3, 2, 1)) == 2);  // 3*(2+1) - (4+2+1)
  CHECK_THROWS_AS(ell(1, Triple(1, 1, 1)), std::invalid_argument);
}

TEST_CASE("divided-power form agrees with exact division when q1 != q2") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-12, 12);
  for (int trial = 0; trial < 100; ++trial) {
    long a = d(rng), b = d(rng);
    if (a == b) continue;
    for (int k : {2, 3, 5, 8}) {
      Int direct = (int_pow(Int(a), k) - int_pow(Int(b), k)) / Int(a - b);
      CHECK(homogeneous_sum(Int(a), Int(b), k) == direct);
    }
  }
  // valid at q1 = q2: sum of n equal terms
  CHECK(homogeneous_sum(Int(3), Int(3), 4) == Int(4 * 27));
}

TEST_CASE("invariants") {
  SpaceInvariants s = invariants(7, Triple(13, 1, 1));
  CHECK(s.dim == 27);
  CHECK(s.ell == Int(13 * 7 - 8));
  CHECK(s.ell_nonzero);
}

TEST_CASE("parity law for homogeneous ell at even n") {
  for (int n : {6, 8, 10}) {
    for (long r1 = -20; r1 <= 20; ++r1)
      for (long r2 = -20; r2 <= 20; ++r2) {
        if (std::gcd(r1, r2) != 1) continue;
        Int l = ell(n, Triple(0, r1, r2));
        CHECK(l % 2 != 0);
      }
  }
}

TEST_CASE("ell parity at even n: admissible triples always give odd ell") {
  // Admissibility forces either both q odd, or one q even with p even; in
  // every case ell is odd when n is even, so parity can never separate these
  // spaces from the homogeneous family.  Checked exhaustively at small scale.
  for (int n : {6, 8, 10}) {
    for (long p = -6; p <= 6; ++p)
      for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b) {
          Triple t(p, a, b);
          if (!is_admissible(t)) continue;
          if (t == Triple(1, 1, 0)) continue;  // degenerate allowance, ell = 0
          CHECK(ell(n, t) % 2 != 0);
        }
  }
  // in particular the (2s+1, 1, 2s-1) family has odd ell
  for (long s = 1; s <= 10; ++s) CHECK(ell(6, Triple(2 * s + 1, 1, 2 * s - 1)) % 2 != 0);
}

TEST_CASE("homogeneous_match") {
  // even target at even n can never match (parity law)
  CHECK(!homogeneous_match(6, Int(122), 12).has_value());
  // brute-force oracle for a reachable target
  int n = 6;
  Int target = abs(ell(n, Triple(0, 2, 1)));
  auto m = homogeneous_match(n, target, 10);
  REQUIRE(m.has_value());
  CHECK(abs(ell(n, Triple(Int(0), m->first, m->second))) == target);

  // target 0: impossible at even n (ell odd), reachable at odd n through the
  // alternating pair (1, -1), where the n+1-term sum telescopes to zero
  CHECK(!homogeneous_match(6, Int(0), 8).has_value());
  auto z = homogeneous_match(7, Int(0), 8);
  REQUIRE(z.has_value());
  CHECK(ell(7, Triple(Int(0), z->first, z->second)) == 0);
}

TEST_CASE("primality") {
  CHECK(is_prime(Int(2)).is_prime);
  CHECK(is_prime(Int(83)).is_prime);
  CHECK(!is_prime(Int(1)).is_prime);
  CHECK(!is_prime(Int(27)).is_prime);
  CHECK(!is_prime(Int(35)).is_prime);
  CHECK(is_prime(Int(71)).is_prime);
  CHECK(is_prime(Int("2305843009213693951")).is_prime);   // 2^61 - 1
  CHECK(!is_prime(Int("4611686018427387903")).is_prime);  // 2^62 - 1 = 3 * ...
  auto big = is_prime(int_pow(Int(2), 89) - 1);            // Mersenne prime
  CHECK(big.is_prime);
  CHECK(big.method == "gmp-probable");
}

TEST_CASE("inhomogeneity certificates") {
  // n even: ell is odd for every admissible triple, so the parity variant
  // cannot fire and the certificate falls back to a bounded search
  auto c1 = inhomogeneity_certificate(6, Triple(3, 1, 1), 10);
  CHECK(c1.variant == InhomVariant::BoundedSearchOnly);
  CHECK(c1.ell_value % 2 != 0);

  // n = 7, (13,1,1): |ell| = 83 prime, 83 = 4*20+3
  auto c2 = inhomogeneity_certificate(7, Triple(13, 1, 1), 10);
  CHECK(c2.variant == InhomVariant::PrimeMod4Certificate);
  CHECK(c2.prime == 83);

  // n = 7, (5,1,1): |ell| = 27 not prime
  auto c3 = inhomogeneity_certificate(7, Triple(5, 1, 1), 10);
  CHECK(c3.variant == InhomVariant::BoundedSearchOnly);
  CHECK(c3.search_bound == 10);

  CHECK_THROWS_AS(inhomogeneity_certificate(1, Triple(3, 1, 1), 5), std::invalid_argument);
}

TEST_CASE("prime_search") {
  auto p7 = prime_search(7, 1);
  REQUIRE(p7.size() == 1);
  CHECK(p7[0] == 13);  // k = 3: 4*3*7 - 1 = 83 prime
  auto p9 = prime_search(9, 2);
  REQUIRE(p9.size() == 2);
  CHECK(p9[0] == 9);  // k = 2: 71 prime (k = 1 gives 35 = 5*7)
  for (const auto& p : prime_search(7, 5)) CHECK(p % 4 == 1);
  CHECK_THROWS_AS(prime_search(6, 1), std::invalid_argument);
}

TEST_CASE("mod-4 obstruction at desk scale") {
  // no coprime pair up to 40 yields |ell| prime congruent to 3 mod 4 at odd n
  for (int n : {7, 9}) {
    for (long r1 = -40; r1 <= 40; ++r1)
      for (long r2 = -40; r2 <= 40; ++r2) {
        if (std::gcd(r1, r2) != 1) continue;
        Int l = abs(ell(n, Triple(0, r1, r2)));
        if (l % 4 == 3) CHECK(!is_prime(l).is_prime);
      }
  }
}
