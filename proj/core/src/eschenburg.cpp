#include "apc/eschenburg.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace apc {

bool is_admissible(const Triple& t) {
  // (1,1,0) fails the middle gcd (gcd(0,0) = 0) because the circle action
  // has a stabilizer at the identity frame; the classification nevertheless
  // carries it as an allowable exceptional triple, so it is admitted here.
  if (t == Triple(1, 1, 0)) return true;
  if (gcd(t.q1, t.q2) != 1) return false;
  if (gcd(Int(t.p - t.q1), t.q2) != 1) return false;
  if (gcd(t.q1, Int(t.p - t.q2)) != 1) return false;
  if (t.q2 > 0) return true;
  return t.q2 == 0 && t.q1 > 0;
}

Triple normalize_triple(const Int& p, const Int& q1, const Int& q2) {
  if (q2 > 0 || (q2 == 0 && q1 > 0)) return Triple(p, q1, q2);
  if (q2 < 0 || (q2 == 0 && q1 < 0)) return Triple(-p, -q1, -q2);
  throw std::invalid_argument("normalize_triple: q1 = q2 = 0 has no canonical form");
}

bool is_excluded_special(const Triple& t) {
  return t == Triple(0, 0, 1) || t == Triple(0, 1, 0) || t == Triple(1, 1, 0) ||
         t == Triple(0, -1, 1);
}

namespace {

BiPoly mono(int i, int j, const Int& c) { return BiPoly::monomial(i, j, Rat(c)); }

}  // namespace

BiPoly derive_f_oracle(const Triple& t) {
  const Int& p = t.p;
  const Int& q1 = t.q1;
  const Int& q2 = t.q2;

  // Q and P are the solved denominators/numerators of beta after the
  // substitution x = cos^2 r, y = cos^2 t.
  BiPoly Q = mono(1, 1, p * (p - 2 * q1 - q2)) + mono(0, 0, q1 * (p - q2));
  BiPoly P = mono(1, 1, p * (p - 3 * q1)) + mono(0, 0, q1 * (p + q1));

  // Numerator of Im(y3), rewritten with cos^2 r -> x, sin^2 r -> 1-x,
  // cos^2 t -> y, sin^2 t -> 1-y.
  BiPoly N = mono(2, 2, p * (q1 - q2)) + mono(1, 2, p * (p - 3 * q1)) +
             mono(1, 1, -p * q1 - p * q2 + q1 * q1 + 3 * q1 * q2) +
             mono(0, 1, p * q1 + q1 * q1) + mono(0, 0, -q1 * (q1 + q2));

  BiPoly one = BiPoly::constant(Rat(1));
  BiPoly x = BiPoly::var_x();
  BiPoly y = BiPoly::var_y();
  BiPoly lead = (one - x) * (one - y) * y * Rat(4);
  return lead * Q * (Q - P) - N * N;
}

BiPoly build_f(const Triple& t) { return derive_f_oracle(t); }

namespace {

/// The printed table, entry by entry.  `literal` reads the corrupt entries in
/// the only evaluable way (stray token dropped, the stray subscript read as
/// p); audit_f_table reports their corruption separately.
BiPoly table_f(const Triple& t, bool corrected) {
  const Int& p = t.p;
  const Int& q1 = t.q1;
  const Int& q2 = t.q2;
  BiPoly f;
  auto set = [&f](int i, int j, const Int& c) { f.add_term(i, j, Rat(c)); };

  set(4, 4, -p * p * (q1 - q2) * (q1 - q2));
  set(3, 4, -2 * p * p * (p - q1 - 2 * q2) * (q2 - q1));
  set(3, 3, -2 * p * (q1 - q2) * (2 * p * p - 5 * p * q1 - 3 * p * q2 + q1 * q1 + 3 * q1 * q2));
  set(2, 4, -p * p * (p - q1 - 2 * q2) * (p - q1 - 2 * q2));
  set(2, 3, 2 * p * (p - q1 - 2 * q2) * (3 * p * q1 - p * q2 - 6 * q1 * q1 - 2 * q1 * q2));
  set(2, 2, -p * p * q1 * q1 + 6 * p * p * q1 * q2 - p * p * q2 * q2 - 4 * p * q1 * q1 * q1 -
                4 * p * q1 * q2 * q2 - q1 * q1 * q1 * q1 - 6 * q1 * q1 * q1 * q2 -
                9 * q1 * q1 * q2 * q2);
  set(1, 3, -2 * p * q1 * (p - q1 - 2 * q2) * (p - q1 - 2 * q2));
  set(1, 2, 2 * q1 * (2 * p + q1) * (q1 - q2) * (p - q1 - 2 * q2));
  set(1, 1, 2 * q1 * (q1 + q2) * (p * q1 - p * q2 + q1 * q1 + q1 * q2));
  set(0, 2, -q1 * q1 * (p - q1 - 2 * q2) * (p - q1 - 2 * q2));
  set(0, 1, -2 * q1 * q1 * (q1 + q2) * (p - q1 - 2 * q2));
  if (corrected)
    set(0, 0, -q1 * q1 * (q1 + q2) * (q1 + q2));
  else
    set(0, 0, -q1 * q1 * (q1 + q2));
  return f;
}

}  // namespace

BiPoly table_f_literal(const Triple& t) { return table_f(t, false); }
BiPoly table_f_corrected(const Triple& t) { return table_f(t, true); }

std::vector<TableAuditEntry> audit_f_table() {
  // Coefficients are polynomials of total degree <= 4 in (p, q1, q2); exact
  // agreement on the 7^3 grid below decides the identities.
  bool mismatch_at[5][5] = {};
  for (long p = -3; p <= 3; ++p)
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b) {
        Triple t(p, a, b);
        BiPoly derived = derive_f_oracle(t);
        BiPoly printed = table_f_literal(t);
        for (int i = 0; i <= 4; ++i)
          for (int j = 0; j <= 4; ++j)
            if (derived.coeff(i, j) != printed.coeff(i, j)) mismatch_at[i][j] = true;
      }
  std::vector<TableAuditEntry> out;
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) {
      bool mismatch = mismatch_at[i][j];
      TableAuditEntry e;
      e.i = i;
      e.j = j;
      if (i == 2 && j == 4) {
        e.status = AuditStatus::CorruptSource;
        e.note = mismatch ? "printed entry carries a stray token and mismatches"
                          : "printed entry carries a stray trailing token; the readable "
                            "part matches the derivation";
      } else if (i == 2 && j == 3) {
        e.status = AuditStatus::CorruptSource;
        e.note = mismatch ? "printed entry carries a stray subscript and mismatches"
                          : "printed entry carries a stray subscript; read as p it "
                            "matches the derivation";
      } else if (mismatch) {
        e.status = AuditStatus::ValueMismatch;
        e.note = "printed value disagrees with the derivation";
      } else {
        e.status = AuditStatus::Match;
      }
      out.push_back(e);
    }
  }
  return out;
}

BiPoly build_g(const Triple& t) {
  Int factor = t.p - t.q1 - 2 * t.q2;
  if (factor == 0)
    throw std::invalid_argument("build_g: p = q1 + 2 q2 (factor vanishes)");
  BiPoly f = build_f(t);
  BiPoly num = BiPoly::var_x() * f.partial(Axis::X) - BiPoly::var_y() * f.partial(Axis::Y);
  BiPoly div = BiPoly::monomial(0, 1, Rat(Int(-2 * factor)));
  auto g = num.exact_div(div);
  if (!g) throw std::domain_error("build_g: nonzero remainder in exact division");
  return *g;
}

std::array<BiPoly, 3> type123_loci(const Triple& t) {
  BiPoly x = BiPoly::var_x();
  BiPoly y = BiPoly::var_y();
  BiPoly one = BiPoly::constant(Rat(1));
  return {x * y * Rat(t.p) - BiPoly::constant(Rat(t.q1)),
          y * (one - x) * Rat(t.p) - BiPoly::constant(Rat(t.q2)),
          y * Rat(t.p) - BiPoly::constant(Rat(Int(t.q1 + t.q2)))};
}

SignCertificate k_regime_check(const Triple& t, const DecideOptions& opts) {
  Int s = t.q1 + t.q2;
  if (!(s < 0 && t.p >= s && t.p <= t.q2))
    throw std::invalid_argument("k_regime_check: requires q1+q2 < 0 and p in [q1+q2, q2]");
  // k in (s, c) coordinates; reuse (x, y) for (sin^2 r, cos^2 t).
  BiPoly k = mono(1, 1, 4 * t.p * (t.p - t.q1 - t.q2)) + mono(0, 1, -4 * t.p * t.q2) +
             mono(0, 0, 4 * t.q2 * (t.q1 + t.q2));
  return decide_nonpositive(k, Box(), opts);
}

Classification classify_theorem(const Triple& t) {
  if (!is_admissible(t))
    throw std::invalid_argument("classify_theorem: inadmissible triple " + t.str());
  Classification c;
  c.provenance = Provenance::TheoremMain2;
  if (t == Triple(0, 0, 1) || t == Triple(0, 1, 0) || t == Triple(1, 1, 0)) {
    c.verdict = Curvature::NotAlmostPositive;
    c.detail = "exceptional triple";
    return c;
  }
  Int s = t.q1 + t.q2;
  Int lo = std::min(s, t.q2), hi = std::max(s, t.q2);
  bool branch1 = (0 >= lo && 0 <= hi) && (t.p >= lo && t.p <= hi);
  bool branch2 = (t.p >= s && s > 0 && t.q1 >= 0);
  if (branch1 || branch2) {
    c.verdict = Curvature::AlmostPositive;
    c.detail = branch1 ? "branch1: 0,p in [min(q1+q2,q2), max(q1+q2,q2)]"
                       : "branch2: p >= q1+q2 > 0 and q1 >= 0";
  } else {
    c.verdict = Curvature::NotAlmostPositive;
    c.detail = "no branch applies";
  }
  return c;
}

Classification classify_polynomial(const Triple& t, const DecideOptions& opts) {
  if (!is_admissible(t))
    throw std::invalid_argument("classify_polynomial: inadmissible triple " + t.str());
  Classification c;
  if (is_excluded_special(t)) {
    c.provenance = Provenance::TabulatedSpecialCase;
    c.verdict = (t == Triple(0, -1, 1)) ? Curvature::AlmostPositive
                                        : Curvature::NotAlmostPositive;
    c.detail = "excluded from the polynomial criterion; tabulated verdict";
    return c;
  }
  c.provenance = Provenance::PolynomialCriterion;
  SignCertificate cert = decide_nonpositive(build_f(t), Box(), opts);
  if (cert.budget_exhausted)
    throw BudgetExhausted("classify_polynomial: certificate incomplete for " + t.str());
  c.verdict = cert.verdict == Verdict::Nonpositive ? Curvature::AlmostPositive
                                                   : Curvature::NotAlmostPositive;
  c.detail = cert.verdict == Verdict::Nonpositive ? "f <= 0 on the unit square"
                                                  : "positivity witness found";
  c.certificate = std::move(cert);
  return c;
}

std::vector<Triple> enumerate_admissible(int bound) {
  if (bound < 1) throw std::invalid_argument("enumerate_admissible: bound >= 1");
  std::vector<Triple> out;
  for (long p = -bound; p <= bound; ++p)
    for (long a = -bound; a <= bound; ++a)
      for (long b = -bound; b <= bound; ++b) {
        Triple t(p, a, b);
        if (is_admissible(t)) out.push_back(t);
      }
  return out;  // loop order is already (p, q1, q2) ascending
}

ScanReport cross_validate(int bound, const DecideOptions& opts, int threads) {
  if (bound < 1) throw std::invalid_argument("cross_validate: bound >= 1");
  ScanReport rep;
  long total = (2L * bound + 1) * (2L * bound + 1) * (2L * bound + 1);
  auto triples = enumerate_admissible(bound);
  rep.skipped_inadmissible = total - static_cast<long>(triples.size());

  rep.rows.resize(triples.size());
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : static_cast<int>(hw);
  }
  std::atomic<size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&]() {
    try {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= triples.size()) break;
        ScanRow row;
        row.t = triples[i];
        row.theorem_verdict = classify_theorem(triples[i]).verdict;
        Classification pc = classify_polynomial(triples[i], opts);
        row.poly_verdict = pc.verdict;
        row.agree = row.theorem_verdict == row.poly_verdict;
        if (pc.certificate && pc.certificate->witness) row.witness = pc.certificate->witness;
        rep.rows[i] = std::move(row);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      next.store(triples.size());  // drain the queue
    }
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);

  for (const auto& r : rep.rows)
    if (!r.agree) ++rep.mismatches;
  for (const auto& e : audit_f_table())
    if (e.status != AuditStatus::Match) rep.audit.push_back(e);
  return rep;
}

const char* to_string(Curvature c) {
  return c == Curvature::AlmostPositive ? "almost_positive" : "not_almost_positive";
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::TheoremMain2: return "theorem";
    case Provenance::PolynomialCriterion: return "polynomial";
    default: return "tabulated";
  }
}

}  // namespace apc
