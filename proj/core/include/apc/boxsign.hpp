#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apc/bernstein.hpp"

namespace apc {

enum class Verdict { Nonpositive, Positive };

/// One of the four exact edge decisions.
struct EdgeEvidence {
  std::string edge;  // "x0", "x1", "y0", "y1"
  bool all_nonpositive = false;
  std::optional<std::pair<Rat, Rat>> witness;  // 2-d point when positive
};

/// A sub-box whose Bernstein coefficients are all <= 0.
struct LeafEvidence {
  Box box;
};

/// An isolated interior critical-point candidate with its decided sign of f.
struct CriticalPointEvidence {
  QInterval x, y;
  int sign = 0;  // -1 strictly negative, 0 exact zero
  std::string note;
};

/// Machine-checkable verdict that a BiPoly is <= 0 on a box, or a rational
/// witness of positivity.
struct SignCertificate {
  Verdict verdict = Verdict::Nonpositive;
  std::optional<std::pair<Rat, Rat>> witness;  // exact positive point
  std::vector<EdgeEvidence> edges;
  std::vector<LeafEvidence> leaves;
  std::vector<CriticalPointEvidence> critical_points;
  bool budget_exhausted = false;
  std::vector<std::string> notes;

  std::string to_json() const;
  static SignCertificate from_json(const std::string& json);

  bool operator==(const SignCertificate& o) const;
};

struct DecideOptions {
  int budget = 24;       // subdivision depth limit
  bool tier3 = true;     // exact critical-point elimination
  int refine_cap = 96;   // interval refinement rounds per candidate
};

/// Decides whether f <= 0 on the box.  Sound in both directions: a Positive
/// verdict carries a rational witness with exact positive value, and a
/// Nonpositive verdict is backed by exact edge certificates plus either a
/// complete Bernstein cover or an exact interior critical-point ledger.
/// When the budget runs out with tier 3 disabled the certificate comes back
/// with budget_exhausted set and must be treated as unknown.
SignCertificate decide_nonpositive(const BiPoly& f, const Box& box,
                                   const DecideOptions& opts = {});

/// Max of f over a grid x grid rational lattice, evaluated exactly and then
/// rounded; a lower bound for the true maximum.  Diagnostic only.
double float_max_estimate(const BiPoly& f, const Box& box, int grid);

}  // namespace apc
