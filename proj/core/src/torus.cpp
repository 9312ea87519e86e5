#include "apc/torus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace apc {

std::string TorusAction::str() const {
  return "(" + std::to_string(p) + "," + std::to_string(q1) + "," + std::to_string(q2) +
         "," + std::to_string(s1) + "," + std::to_string(s2) + ")";
}

namespace {

long gcd3(long a, long b, long c) { return std::gcd(std::gcd(a, b), c); }

TorusAction invert_z(const TorusAction& a) { return {-a.p, -a.q1, -a.q2, a.s1, a.s2}; }
TorusAction invert_w(const TorusAction& a) { return {a.p, a.q1, a.q2, -a.s1, -a.s2}; }
TorusAction shift_w(const TorusAction& a, long c) {
  return {a.p, a.q1 + c * a.s1, a.q2 + c * a.s2, a.s1, a.s2};
}
TorusAction swap_slots(const TorusAction& a) { return {a.p, a.q2, a.q1, a.s2, a.s1}; }

bool is_canonical(const TorusAction& a) {
  return a == TorusAction{2, 0, 1, 1, 0} || a == TorusAction{2, 0, 1, -1, 1};
}

}  // namespace

bool is_effective(const TorusAction& a) {
  return a.p != 0 && gcd3(a.p, a.q1, a.q2) == 1 && std::gcd(a.s1, a.s2) == 1;
}

bool is_free(const TorusAction& a) {
  if (std::gcd(a.s1, a.s2) != 1)
    throw std::invalid_argument("is_free: gcd(s1, s2) must be 1");
  auto u = std::abs(a.q1 * a.s2 - a.q2 * a.s1);
  auto v = std::abs((a.q1 - a.p) * a.s2 - a.q2 * a.s1);
  auto w = std::abs(a.q1 * a.s2 - (a.q2 - a.p) * a.s1);
  return u == 1 && v == 1 && w == 1;
}

TorusAction normalize_action(const TorusAction& a) {
  if (!is_free(a)) throw std::invalid_argument("normalize_action: action is not free");
  TorusAction r = a;
  // Put the zero s-slot (if any) second, matching the (2,0,1,1,0) shape.
  if (r.s1 == 0 && r.s2 != 0) r = swap_slots(r);
  if (r.s2 == 0) {
    // Freeness forces |s1| = 1 here.
    if (r.s1 < 0) r = invert_w(r);
    r = shift_w(r, -r.q1 * r.s1);  // q1 -> 0
    if (r.p < 0) r = invert_z(r);
  } else {
    // Both slots nonzero: freeness with p != 0 forces |s1| = |s2| = 1 and
    // s1 = -s2; align to s = (-1, 1).
    if (r.s2 < 0) r = invert_w(r);
    r = shift_w(r, -r.q1 * r.s1);  // q1 -> 0
    if (r.p < 0) r = invert_z(r);
  }
  return r;
}

EnumerationReport enumerate_free(int bound) {
  if (bound < 2) throw std::invalid_argument("enumerate_free: bound >= 2");
  EnumerationReport rep;
  std::vector<TorusAction> canon, stray;
  for (long p = -bound; p <= bound; ++p) {
    if (p == 0) continue;
    for (long q1 = -bound; q1 <= bound; ++q1)
      for (long q2 = -bound; q2 <= bound; ++q2)
        for (long s1 = -bound; s1 <= bound; ++s1)
          for (long s2 = -bound; s2 <= bound; ++s2) {
            TorusAction a{p, q1, q2, s1, s2};
            ++rep.tested;
            if (!is_effective(a)) continue;
            if (!is_free(a)) continue;
            ++rep.free_count;
            TorusAction n = normalize_action(a);
            (is_canonical(n) ? canon : stray).push_back(n);
          }
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  std::sort(stray.begin(), stray.end());
  stray.erase(std::unique(stray.begin(), stray.end()), stray.end());
  rep.canonical = std::move(canon);
  rep.non_canonical = std::move(stray);
  return rep;
}

}  // namespace apc
