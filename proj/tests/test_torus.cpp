#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "apc/torus.hpp"

using namespace apc;

TEST_CASE("freeness predicate") {
  CHECK(is_free({2, 0, 1, 1, 0}));
  CHECK(is_free({2, 0, 1, -1, 1}));
  CHECK(!is_free({1, 1, 0, 0, 1}));
  CHECK(is_free({2, 1, 0, 0, 1}));
  CHECK_THROWS_AS(is_free({2, 0, 1, 2, 4}), std::invalid_argument);
}

TEST_CASE("normalization reaches the canonical forms") {
  CHECK(normalize_action({2, 1, 0, 0, 1}) == TorusAction{2, 0, 1, 1, 0});
  CHECK(normalize_action({-2, 0, -1, -1, 1}) == TorusAction{2, 0, 1, -1, 1});
  CHECK(normalize_action({2, 0, 1, 1, 0}) == TorusAction{2, 0, 1, 1, 0});
  CHECK(normalize_action({2, 0, 1, -1, 1}) == TorusAction{2, 0, 1, -1, 1});
  // idempotence
  for (auto a : {TorusAction{2, 0, 1, 1, 0}, TorusAction{2, 0, 1, -1, 1}})
    CHECK(normalize_action(normalize_action(a)) == normalize_action(a));
}

TEST_CASE("freeness quantities are invariant under the moves") {
  auto quantities = [](const TorusAction& a) {
    return std::array<long, 3>{std::abs(a.q1 * a.s2 - a.q2 * a.s1),
                               std::abs((a.q1 - a.p) * a.s2 - a.q2 * a.s1),
                               std::abs(a.q1 * a.s2 - (a.q2 - a.p) * a.s1)};
  };
  // all free actions within bound 4, each widened by random coordinate
  // changes w' = z^c w (which stay free), for well over 500 samples
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> shift(-30, 30);
  long checked = 0;
  for (long p = -4; p <= 4; ++p) {
    if (p == 0) continue;
    for (long q1 = -4; q1 <= 4; ++q1)
      for (long q2 = -4; q2 <= 4; ++q2)
        for (long s1 = -4; s1 <= 4; ++s1)
          for (long s2 = -4; s2 <= 4; ++s2) {
            TorusAction base{p, q1, q2, s1, s2};
            if (!is_effective(base)) continue;
            if (!is_free(base)) continue;
            for (int rep = 0; rep < 6; ++rep) {
              long c = rep == 0 ? 0 : shift(rng);
              TorusAction a{p, q1 + c * s1, q2 + c * s2, s1, s2};
              REQUIRE(is_free(a));
              ++checked;
              auto q0 = quantities(a);
              TorusAction n = normalize_action(a);
              auto q1s = quantities(n);
              // the three quantities are preserved as a multiset up to order
              std::sort(q0.begin(), q0.end());
              std::sort(q1s.begin(), q1s.end());
              CHECK(q0 == q1s);
              CHECK(is_free(n));
              CHECK((n == TorusAction{2, 0, 1, 1, 0} || n == TorusAction{2, 0, 1, -1, 1}));
            }
          }
  }
  CHECK(checked >= 500);
}

TEST_CASE("enumeration finds exactly the two canonical actions") {
  for (int bound : {2, 3, 5}) {
    auto rep = enumerate_free(bound);
    REQUIRE(rep.canonical.size() == 2);
    CHECK(rep.canonical[0] == TorusAction{2, 0, 1, -1, 1});
    CHECK(rep.canonical[1] == TorusAction{2, 0, 1, 1, 0});
    CHECK(rep.non_canonical.empty());
    CHECK(rep.free_count > 0);
  }
  CHECK_THROWS_AS(enumerate_free(1), std::invalid_argument);
}

TEST_CASE("survivors satisfy the p*s constraints") {
  auto rep = enumerate_free(3);
  for (long p = -3; p <= 3; ++p) {
    if (p == 0) continue;
    for (long q1 = -3; q1 <= 3; ++q1)
      for (long q2 = -3; q2 <= 3; ++q2)
        for (long s1 = -3; s1 <= 3; ++s1)
          for (long s2 = -3; s2 <= 3; ++s2) {
            TorusAction a{p, q1, q2, s1, s2};
            if (!is_effective(a)) continue;
            if (!is_free(a)) continue;
            CHECK((p * s1 == 0 || p * s1 == 2 || p * s1 == -2));
            CHECK((p * s2 == 0 || p * s2 == 2 || p * s2 == -2));
          }
  }
  (void)rep;
}
