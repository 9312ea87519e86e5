#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apc/unipoly.hpp"

namespace apc {

enum class Axis { X, Y };
enum class Edge { X0, X1, Y0, Y1 };

/// Sparse bivariate polynomial over Q, keyed by (x-exponent, y-exponent).
/// No zero coefficients are stored; term order is lexicographic in (i, j),
/// which also fixes the JSON serialization order.
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, Rat>;

  BiPoly() = default;

  static BiPoly zero() { return BiPoly(); }
  static BiPoly constant(const Rat& v);
  static BiPoly monomial(int i, int j, const Rat& c);
  static BiPoly var_x() { return monomial(1, 0, Rat(1)); }
  static BiPoly var_y() { return monomial(0, 1, Rat(1)); }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  int degree_x() const;
  int degree_y() const;
  Rat coeff(int i, int j) const;
  const TermMap& terms() const { return t_; }
  size_t term_count() const { return t_.size(); }

  void add_term(int i, int j, const Rat& c);

  bool operator==(const BiPoly& o) const { return t_ == o.t_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rat& s) const;

  Rat eval(const Rat& x, const Rat& y) const;
  double eval_double(double x, double y) const;
  QInterval eval_interval(const QInterval& x, const QInterval& y) const;

  BiPoly partial(Axis a) const;
  UniPoly edge_restrict(Edge e) const;

  /// Substitutes x (or y) := a + b*t, exactly.
  BiPoly subst_affine(Axis which, const Rat& a, const Rat& b) const;
  BiPoly swap_xy() const;

  /// True when every term has equal exponents, i.e. f(x, y) = F(x*y).
  bool is_diagonal_support() const;
  UniPoly diagonal_profile() const;

  /// Views the polynomial as an element of Q[x][y].
  std::vector<UniPoly> y_coeffs() const;
  static BiPoly from_y_coeffs(const std::vector<UniPoly>& c);

  /// Exact division test; returns the quotient when o divides exactly.
  std::optional<BiPoly> exact_div(const BiPoly& o) const;

  std::string to_string() const;
  std::string to_json() const;
  static BiPoly from_json(const std::string& json);

 private:
  TermMap t_;
};

/// Primitive gcd in Q[x, y] via a subresultant-style PRS in y over Q[x].
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);

/// Resultant with respect to y; rejects zero inputs.
UniPoly resultant_y(const BiPoly& a, const BiPoly& b);
/// Resultant with respect to x (result is a polynomial in y, reported in the
/// single UniPoly variable).
UniPoly resultant_x(const BiPoly& a, const BiPoly& b);

}  // namespace apc
