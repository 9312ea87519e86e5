#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apc/boxsign.hpp"

namespace apc {

/// Integer parameters (p, q1, q2) of a cohomogeneity-two generalized
/// Eschenburg space.
struct Triple {
  Int p, q1, q2;

  Triple() : p(0), q1(0), q2(0) {}
  Triple(Int pp, Int a, Int b) : p(std::move(pp)), q1(std::move(a)), q2(std::move(b)) {}
  Triple(long pp, long a, long b) : p(pp), q1(a), q2(b) {}

  bool operator==(const Triple& o) const { return p == o.p && q1 == o.q1 && q2 == o.q2; }
  bool operator<(const Triple& o) const {
    if (p != o.p) return p < o.p;
    if (q1 != o.q1) return q1 < o.q1;
    return q2 < o.q2;
  }
  std::string str() const {
    return "(" + to_string(p) + "," + to_string(q1) + "," + to_string(q2) + ")";
  }
};

/// Freeness of the circle action: all three gcd conditions, plus the sign
/// convention q2 > 0 or (q2 = 0 and q1 > 0).
bool is_admissible(const Triple& t);

/// Returns (p,q1,q2) or its full negation, whichever satisfies the sign
/// convention; rejects inputs where neither does.
Triple normalize_triple(const Int& p, const Int& q1, const Int& q2);

/// The four triples excluded from the polynomial criterion.
bool is_excluded_special(const Triple& t);

/// Independent derivation of f from the metric equations: with
/// Q = p(p-2q1-q2)xy + q1(p-q2), P = p(p-3q1)xy + q1(p+q1) and N the
/// solved numerator of Im(y3), returns 4(1-x)(1-y)y Q (Q-P) - N^2.
BiPoly derive_f_oracle(const Triple& t);

/// The degree-(4,4) polynomial f; assembled from the derivation (the
/// authoritative route).
BiPoly build_f(const Triple& t);

/// The printed coefficient table, read literally (three entries in the source
/// are typographically corrupt; see audit_f_table).
BiPoly table_f_literal(const Triple& t);

/// Literal table with the constant coefficient fixed to the value forced by
/// the derivation and the boundary formula f(x,0) = -q1^2 (q1+q2)^2.
BiPoly table_f_corrected(const Triple& t);

enum class AuditStatus { Match, ValueMismatch, CorruptSource };

struct TableAuditEntry {
  int i = 0, j = 0;
  AuditStatus status = AuditStatus::Match;
  std::string note;
};

/// Compares the derived coefficients against the printed table as polynomial
/// identities in (p, q1, q2), via exact evaluation on an integer grid large
/// enough to decide equality at these degrees.  Exactly three entries are
/// expected to be flagged.
std::vector<TableAuditEntry> audit_f_table();

/// Exact quotient (x f_x - y f_y) / (-2 (p - q1 - 2 q2) y); rejects
/// p = q1 + 2 q2 and any nonzero remainder.
BiPoly build_g(const Triple& t);

/// The three nowhere-dense loci polynomials p x y - q1, p y (1-x) - q2,
/// p y - q1 - q2 in (x, y) = (cos^2 r, cos^2 t) coordinates.
std::array<BiPoly, 3> type123_loci(const Triple& t);

/// Builds k = 4p((p-q1-q2)s - q2)c + 4 q2 (q1+q2) in (s, c) =
/// (sin^2 r, cos^2 t) and certifies k <= 0 on the unit square.  Requires
/// q1 + q2 < 0 and p in [q1+q2, q2].
SignCertificate k_regime_check(const Triple& t, const DecideOptions& opts = {});

enum class Curvature { AlmostPositive, NotAlmostPositive };
enum class Provenance { TheoremMain2, PolynomialCriterion, TabulatedSpecialCase };

struct Classification {
  Curvature verdict = Curvature::NotAlmostPositive;
  Provenance provenance = Provenance::TheoremMain2;
  std::string detail;
  std::optional<SignCertificate> certificate;
};

struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed-form classification: the two theorem branches plus the exceptional
/// clause for (0,0,1), (0,1,0), (1,1,0).
Classification classify_theorem(const Triple& t);

/// Polynomial classification: tabulated verdicts for the four excluded
/// triples, otherwise nonpositivity of f on the unit square.  Throws
/// BudgetExhausted instead of returning an unsound verdict.
Classification classify_polynomial(const Triple& t, const DecideOptions& opts = {});

/// All admissible triples with max(|p|,|q1|,|q2|) <= bound, ordered by
/// (p, q1, q2).
std::vector<Triple> enumerate_admissible(int bound);

struct ScanRow {
  Triple t;
  Curvature theorem_verdict = Curvature::NotAlmostPositive;
  Curvature poly_verdict = Curvature::NotAlmostPositive;
  bool agree = false;
  std::optional<std::pair<Rat, Rat>> witness;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  long skipped_inadmissible = 0;
  int mismatches = 0;
  std::vector<TableAuditEntry> audit;  // flagged table entries, for the report
};

/// Runs both classifiers over every admissible triple in range; rows come
/// back in canonical order regardless of the worker count.
ScanReport cross_validate(int bound, const DecideOptions& opts = {}, int threads = 0);

const char* to_string(Curvature c);
const char* to_string(Provenance p);

}  // namespace apc
