#pragma once

#include <string>
#include <vector>

#include "apc/rational.hpp"

namespace apc {

/// Parameters of a U(n-1) x T^2 biquotient action
/// (C,z,w) * B = diag(z^p,1,...,1) B diag(z^q1 w^s1, z^q2 w^s2, C)^{-1}.
struct TorusAction {
  long p = 0, q1 = 0, q2 = 0, s1 = 0, s2 = 0;

  bool operator==(const TorusAction& o) const {
    return p == o.p && q1 == o.q1 && q2 == o.q2 && s1 == o.s1 && s2 == o.s2;
  }
  bool operator<(const TorusAction& o) const {
    auto a = std::tie(p, q1, q2, s1, s2);
    auto b = std::tie(o.p, o.q1, o.q2, o.s1, o.s2);
    return a < b;
  }
  std::string str() const;
};

/// Effectiveness: gcd(p, q1, q2) = 1 and gcd(s1, s2) = 1, with p != 0 for the
/// inhomogeneous family.
bool is_effective(const TorusAction& a);

/// Freeness: |q1 s2 - q2 s1| = |(q1-p) s2 - q2 s1| = |q1 s2 - (q2-p) s1| = 1.
/// Rejects gcd(s1, s2) != 1.
bool is_free(const TorusAction& a);

/// Drives a free action to one of the two canonical forms using the torus
/// reparameterizations (z or w inversion, w' = z^c w) and the coordinate swap
/// of the two circle slots.  Idempotent on canonical forms.
TorusAction normalize_action(const TorusAction& a);

struct EnumerationReport {
  std::vector<TorusAction> canonical;      // distinct classes, sorted
  std::vector<TorusAction> non_canonical;  // survivors the moves failed to place
  long tested = 0;
  long free_count = 0;
};

/// Exhaustive search over parameter entries in [-bound, bound] with p != 0.
EnumerationReport enumerate_free(int bound);

}  // namespace apc
