#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace apc {

/// Arbitrary-precision integer and canonical rational (gcd-reduced, positive
/// denominator).  GMP maintains both invariants for us after every operation.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& n) { return sgn(n); }

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }

inline double to_double(const Rat& r) { return r.get_d(); }

inline std::string to_string(const Int& n) { return n.get_str(); }

/// "num/den" with den omitted when 1; used by every JSON surface.
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "n", "-n", or "n/d"; canonicalizes.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline Int int_pow(Int base, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat r;
  mpq_set_num(r.get_mpq_t(), int_pow(base.get_num(), e).get_mpz_t());
  mpq_set_den(r.get_mpq_t(), int_pow(base.get_den(), e).get_mpz_t());
  return r;  // canonical already: gcd(n,d)=1 implies gcd(n^e,d^e)=1
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Closed rational interval; building block of the sound enclosure arithmetic
/// used by the critical-point sign refinement.
struct QInterval {
  Rat lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rat v) : lo(v), hi(v) {}
  QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("QInterval: lo > hi");
  }

  bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }

  QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }

  QInterval operator*(const QInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rat mn = a, mx = a;
    for (const Rat& v : {b, c, d}) {
      if (v < mn) mn = v;
      if (v > mx) mx = v;
    }
    return {mn, mx};
  }

  QInterval pow(unsigned e) const {
    if (e == 0) return QInterval(Rat(1));
    QInterval r = *this;
    for (unsigned k = 1; k < e; ++k) r = r * *this;
    return r;
  }
};

inline QInterval scale(const Rat& c, const QInterval& iv) {
  if (sign(c) >= 0) return {c * iv.lo, c * iv.hi};
  return {c * iv.hi, c * iv.lo};
}

}  // namespace apc
