#include "apc/topology.hpp"

namespace apc {

Int homogeneous_sum(const Int& q1, const Int& q2, int k) {
  // S_1 = 1, S_{m+1} = q1 * S_m + q2^m
  Int acc(0), pw2(1);
  for (int m = 0; m < k; ++m) {
    acc = q1 * acc + pw2;
    pw2 *= q2;
  }
  return acc;
}

Int ell(int n, const Triple& t) {
  if (n < 2) throw std::invalid_argument("ell: n >= 2 required");
  return t.p * homogeneous_sum(t.q1, t.q2, n) - homogeneous_sum(t.q1, t.q2, n + 1);
}

SpaceInvariants invariants(int n, const Triple& t) {
  SpaceInvariants s;
  s.n = n;
  s.dim = 4 * n - 1;
  s.ell = ell(n, t);
  s.ell_nonzero = s.ell != 0;
  return s;
}

std::optional<std::pair<Int, Int>> homogeneous_match(int n, const Int& target, int bound) {
  if (bound < 1) throw std::invalid_argument("homogeneous_match: bound >= 1");
  Int want = abs(target);
  for (long r1 = -bound; r1 <= bound; ++r1) {
    for (long r2 = -bound; r2 <= bound; ++r2) {
      Int a(r1), b(r2);
      if (gcd(a, b) != 1) continue;
      if (abs(ell(n, Triple(Int(0), a, b))) == want) return {{a, b}};
    }
  }
  return std::nullopt;
}

namespace {

bool mr_witness(const Int& n, const Int& d, unsigned long r, const Int& a) {
  Int base = a % n;
  if (base == 0) return false;
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness
}

}  // namespace

PrimalityResult is_prime(const Int& n) {
  PrimalityResult res;
  if (n < 2) {
    res.method = "trivial";
    return res;
  }
  for (long sp : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    if (n == sp) {
      res.is_prime = true;
      res.method = "trial-division";
      return res;
    }
    if (n % sp == 0) {
      res.method = "trial-division";
      return res;
    }
  }
  Int d = n - 1;
  unsigned long r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  Int two_64 = int_pow(Int(2), 64);
  if (n < two_64) {
    // This witness set is deterministic below 2^64.
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
      if (mr_witness(n, d, r, Int(a))) {
        res.method = "deterministic-mr64";
        return res;
      }
    }
    res.is_prime = true;
    res.method = "deterministic-mr64";
    return res;
  }
  int g = mpz_probab_prime_p(n.get_mpz_t(), 40);
  res.is_prime = g > 0;
  res.method = "gmp-probable";
  return res;
}

InhomogeneityCertificate inhomogeneity_certificate(int n, const Triple& t,
                                                   int search_bound) {
  if (n < 2) throw std::invalid_argument("inhomogeneity_certificate: n >= 2 required");
  if (!is_admissible(t))
    throw std::invalid_argument("inhomogeneity_certificate: inadmissible triple");
  InhomogeneityCertificate cert;
  cert.n = n;
  cert.ell_value = ell(n, t);

  if (n % 2 == 0 && cert.ell_value % 2 == 0) {
    cert.variant = InhomVariant::ParityCertificate;
    return cert;
  }
  if (n % 2 == 1) {
    Int a = abs(cert.ell_value);
    PrimalityResult pr = is_prime(a);
    if (pr.is_prime && a % 4 == 3) {
      cert.variant = InhomVariant::PrimeMod4Certificate;
      cert.prime = a;
      cert.primality_method = pr.method;
      return cert;
    }
  }
  cert.variant = InhomVariant::BoundedSearchOnly;
  cert.search_bound = search_bound;
  cert.match_found = homogeneous_match(n, cert.ell_value, search_bound);
  return cert;
}

std::vector<Int> prime_search(int n, int count) {
  if (n % 2 == 0) throw std::invalid_argument("prime_search: n must be odd");
  if (count < 1) throw std::invalid_argument("prime_search: count >= 1");
  std::vector<Int> out;
  for (Int k(1); static_cast<int>(out.size()) < count; ++k) {
    Int candidate = 4 * k * n - 1;
    if (is_prime(candidate).is_prime) out.push_back(4 * k + 1);
  }
  return out;
}

}  // namespace apc
