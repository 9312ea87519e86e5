#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apc/eschenburg.hpp"

namespace apc {

/// Dimension and the cohomology integer ell with |H^{2n}| = |ell|.
struct SpaceInvariants {
  int n = 2;
  int dim = 7;  // 4n - 1
  Int ell;
  bool ell_nonzero = true;  // H^{2n} has order |ell| only when ell != 0
};

/// Homogeneous power sum q1^{k-1} + q1^{k-2} q2 + ... + q2^{k-1}; the
/// divided-power form of (q1^k - q2^k)/(q1 - q2), valid at q1 = q2.
Int homogeneous_sum(const Int& q1, const Int& q2, int k);

/// ell = p * S_n(q1,q2) - S_{n+1}(q1,q2).
Int ell(int n, const Triple& t);

SpaceInvariants invariants(int n, const Triple& t);

/// Searches coprime pairs |r1|, |r2| <= bound with |ell(n, (0,r1,r2))| equal
/// to |target|; first match in (r1, r2) order.
std::optional<std::pair<Int, Int>> homogeneous_match(int n, const Int& target, int bound);

struct PrimalityResult {
  bool is_prime = false;
  std::string method;  // "trial-division", "deterministic-mr64", "gmp-probable"
};

/// Deterministic for inputs below 2^64 (fixed Miller-Rabin witness set);
/// probable-prime beyond, with the method recorded.
PrimalityResult is_prime(const Int& n);

enum class InhomVariant { ParityCertificate, PrimeMod4Certificate, BoundedSearchOnly };

struct InhomogeneityCertificate {
  InhomVariant variant = InhomVariant::BoundedSearchOnly;
  int n = 2;
  Int ell_value;
  // PrimeMod4Certificate
  Int prime;
  std::string primality_method;
  // BoundedSearchOnly
  int search_bound = 0;
  std::optional<std::pair<Int, Int>> match_found;  // evidence against, if any
};

/// Parity certificate when n is even and ell is even; prime = 3 mod 4
/// certificate when n is odd and |ell| is prime with that residue; otherwise
/// a bounded search report, which is evidence rather than proof.
InhomogeneityCertificate inhomogeneity_certificate(int n, const Triple& t, int search_bound);

/// First `count` values k >= 1 with 4kn - 1 prime, reported as p = 4k + 1.
std::vector<Int> prime_search(int n, int count);

}  // namespace apc
