#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "apc/rational.hpp"

namespace apc {

/// Dense univariate polynomial over Q.  Coefficient i is the coefficient of
/// x^i; trailing zeros are trimmed so the leading coefficient is nonzero
/// unless the polynomial is identically zero (empty vector).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rat& v);
  static UniPoly monomial(int deg, const Rat& coeff);
  /// x
  static UniPoly x() { return monomial(1, Rat(1)); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& lead() const;
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& s) const;

  Rat eval(const Rat& x) const;
  QInterval eval_interval(const QInterval& x) const;
  UniPoly derivative() const;

  /// Field division: *this = q*d + r with deg r < deg d.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  /// Division that must be exact; throws std::domain_error on nonzero remainder.
  UniPoly exact_div(const UniPoly& d) const;

  /// Scales to integer coefficients with content 1 and positive leading
  /// coefficient; zero stays zero.
  UniPoly primitive() const;

  UniPoly gcd(const UniPoly& o) const;
  UniPoly squarefree_part() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Signed-remainder Sturm chain of the squarefree part, remainders stripped to
/// primitive form (positive scaling keeps the sign-variation property).
std::vector<UniPoly> sturm_chain(const UniPoly& squarefree);

/// Number of distinct real roots in (a, b]; requires g(a) != 0 and g(b) != 0
/// for exactness at the endpoints, which the isolation driver guarantees.
int sturm_count(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b);

/// One isolated real root: either an exact rational point or an open interval
/// (lo, hi) containing exactly one simple root of the squarefree polynomial,
/// with nonzero values at both endpoints.
struct RootInterval {
  Rat lo, hi;
  bool exact = false;
  Rat point;  // valid when exact

  Rat mid() const { return exact ? point : (lo + hi) / 2; }
};

/// Isolates all distinct real roots of g in [lo, hi], endpoints included.
/// Non-exact intervals are refined to width <= max_width (default 2^-32);
/// pass a nonpositive width to skip the extra refinement.
std::vector<RootInterval> isolate_roots(const UniPoly& g, const Rat& lo, const Rat& hi,
                                        const Rat& max_width = make_rat(1, 4294967296L));

/// Halves the width of a non-exact isolating interval (may discover an exact
/// rational root and switch the representation).
void refine_root(const UniPoly& squarefree, RootInterval& r);

/// Refines until width <= w.
void refine_root_to_width(const UniPoly& squarefree, RootInterval& r, const Rat& w);

/// Sound and complete sign decision for "g <= 0 on [lo, hi]".
struct SturmDecision {
  bool all_nonpositive = false;
  std::optional<Rat> witness;  // g(witness) > 0 exactly when present
};

SturmDecision sturm_decide(const UniPoly& g, const Rat& lo, const Rat& hi);

}  // namespace apc
