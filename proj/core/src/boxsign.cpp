#include "apc/boxsign.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "json.hpp"

namespace apc {

namespace {

struct Ctx {
  const BiPoly& f;
  const Box& box;
  const DecideOptions& opts;
  SignCertificate cert;
  bool positive_found = false;

  bool try_witness(const Rat& x, const Rat& y) {
    if (positive_found) return true;
    if (!box.contains(x, y)) return false;
    if (sign(f.eval(x, y)) > 0) {
      cert.verdict = Verdict::Positive;
      cert.witness = {{x, y}};
      positive_found = true;
      return true;
    }
    return false;
  }
};

std::pair<Rat, Rat> edge_point(const Box& b, Edge e, const Rat& t) {
  switch (e) {
    case Edge::X0: return {b.x_lo, t};
    case Edge::X1: return {b.x_hi, t};
    case Edge::Y0: return {t, b.y_lo};
    default: return {t, b.y_hi};
  }
}

bool check_edges(Ctx& c) {
  struct Item { Edge e; const char* name; bool along_y; };
  const Item items[] = {{Edge::X0, "x0", true},
                        {Edge::X1, "x1", true},
                        {Edge::Y0, "y0", false},
                        {Edge::Y1, "y1", false}};
  for (const auto& it : items) {
    // The Edge enum is stated for the unit square; general boxes restrict by
    // pinning one variable to the box bound.
    UniPoly g;
    if (it.e == Edge::X0)
      g = c.f.subst_affine(Axis::X, c.box.x_lo, Rat(0)).edge_restrict(Edge::X0);
    else if (it.e == Edge::X1)
      g = c.f.subst_affine(Axis::X, c.box.x_hi, Rat(0)).edge_restrict(Edge::X0);
    else if (it.e == Edge::Y0)
      g = c.f.subst_affine(Axis::Y, c.box.y_lo, Rat(0)).edge_restrict(Edge::Y0);
    else
      g = c.f.subst_affine(Axis::Y, c.box.y_hi, Rat(0)).edge_restrict(Edge::Y0);

    Rat lo = it.along_y ? c.box.y_lo : c.box.x_lo;
    Rat hi = it.along_y ? c.box.y_hi : c.box.x_hi;
    auto d = sturm_decide(g, lo, hi);
    EdgeEvidence ev;
    ev.edge = it.name;
    ev.all_nonpositive = d.all_nonpositive;
    if (!d.all_nonpositive) {
      auto pt = edge_point(c.box, it.e, *d.witness);
      ev.witness = pt;
      c.cert.edges.push_back(ev);
      c.cert.verdict = Verdict::Positive;
      c.cert.witness = pt;
      c.positive_found = true;
      return false;
    }
    c.cert.edges.push_back(ev);
  }
  return true;
}

/// f with support on the exponent diagonal is F(x*y): decide univariately on
/// the exact range of x*y over the box.  Returns false when a positive
/// witness was installed; sets `decided` when the fast path settled things.
bool diagonal_fast_path(Ctx& c, bool& decided) {
  decided = false;
  if (!c.f.is_diagonal_support() || c.f.degree_x() < 1) return true;
  if (sign(c.box.x_lo) < 0 || sign(c.box.y_lo) < 0) return true;
  UniPoly F = c.f.diagonal_profile();
  Rat wlo = c.box.x_lo * c.box.y_lo;
  Rat whi = c.box.x_hi * c.box.y_hi;
  auto d = sturm_decide(F, wlo, whi);
  if (d.all_nonpositive) {
    decided = true;
    c.cert.notes.push_back("diagonal support: univariate profile nonpositive on the xy-range");
    return true;
  }
  // Lift the positive value w0 of x*y back to a box point.
  Rat w0 = *d.witness;
  for (int k = 64; k >= 1; --k) {
    Rat x = c.box.x_lo + c.box.width_x() * make_rat(k, 64);
    if (x == 0) continue;
    Rat y = w0 / x;
    if (c.box.contains(x, y) && c.try_witness(x, y)) return false;
  }
  if (w0 == 0 && c.try_witness(c.box.x_lo, c.box.y_lo)) return false;
  c.cert.notes.push_back("diagonal profile positive but witness lift failed");
  return true;  // fall through to the general tiers
}

void coarse_positive_scan(Ctx& c, int grid) {
  for (int i = 0; i <= grid && !c.positive_found; ++i)
    for (int j = 0; j <= grid && !c.positive_found; ++j)
      c.try_witness(c.box.x_lo + c.box.width_x() * make_rat(i, grid),
                    c.box.y_lo + c.box.width_y() * make_rat(j, grid));
}

struct QueueItem {
  BernsteinPatch patch;
  int depth;
};

/// Bernstein subdivision tier.  Returns false when a positive witness was
/// installed; boxes that exceeded the depth budget land in `stalled`.
bool bernstein_tier(Ctx& c, std::vector<Box>& stalled) {
  std::deque<QueueItem> queue;
  queue.push_back({BernsteinPatch::from(c.f, c.box), 0});
  while (!queue.empty()) {
    QueueItem item = std::move(queue.front());
    queue.pop_front();
    const BernsteinPatch& p = item.patch;
    if (p.all_nonpositive()) {
      c.cert.leaves.push_back({p.box()});
      continue;
    }
    const Box& b = p.box();
    auto [ai, aj] = p.argmax();
    Rat gx = p.deg_x() > 0 ? b.x_lo + b.width_x() * make_rat(ai, p.deg_x()) : b.x_lo;
    Rat gy = p.deg_y() > 0 ? b.y_lo + b.width_y() * make_rat(aj, p.deg_y()) : b.y_lo;
    if (c.try_witness(gx, gy)) return false;
    if (c.try_witness((b.x_lo + b.x_hi) / 2, (b.y_lo + b.y_hi) / 2)) return false;
    if (item.depth >= c.opts.budget) {
      stalled.push_back(b);
      continue;
    }
    Axis split = b.width_x() >= b.width_y() ? Axis::X : Axis::Y;
    auto [lo, hi] = p.subdivide(split);
    queue.push_back({std::move(lo), item.depth + 1});
    queue.push_back({std::move(hi), item.depth + 1});
  }
  return true;
}

struct CandidateAxis {
  UniPoly squarefree;
  std::vector<RootInterval> roots;
};

/// Roots of r strictly inside (lo, hi).
CandidateAxis isolate_axis(const UniPoly& r, const Rat& lo, const Rat& hi) {
  CandidateAxis a;
  a.squarefree = r.squarefree_part();
  for (auto& ri : isolate_roots(a.squarefree, lo, hi)) {
    if (ri.exact && (ri.point == lo || ri.point == hi)) continue;
    a.roots.push_back(ri);
  }
  return a;
}

BiPoly bipoly_in_x(const UniPoly& p) {
  BiPoly b;
  for (int i = 0; i <= p.degree(); ++i) b.add_term(i, 0, p.coeff(i));
  return b;
}

BiPoly bipoly_in_y(const UniPoly& p) {
  BiPoly b;
  for (int i = 0; i <= p.degree(); ++i) b.add_term(0, i, p.coeff(i));
  return b;
}

/// Lazily computed elimination polynomials used only to confirm exact zeros.
struct ElimCache {
  const Ctx& c;
  const CandidateAxis& ax;
  const CandidateAxis& ay;
  std::optional<UniPoly> elim_y_;  // res_x(A(x), f), a polynomial in y
  std::optional<UniPoly> elim_x_;  // res_y(B(y), f), a polynomial in x

  const UniPoly& elim_y();
  const UniPoly& elim_x();
};

/// Sign of f at the candidate (alpha, beta): -1 certified negative, 0 exact
/// zero (confirmed through both elimination resultants), +1 positive with a
/// rational witness installed in the context.
int candidate_sign(Ctx& c, const CandidateAxis& ax, RootInterval rx,
                   const CandidateAxis& ay, RootInterval ry, ElimCache& elim,
                   QInterval& out_x, QInterval& out_y) {
  for (int round = 0; round < c.opts.refine_cap; ++round) {
    if (rx.exact && ry.exact) {
      out_x = QInterval(rx.point);
      out_y = QInterval(ry.point);
      int s = sign(c.f.eval(rx.point, ry.point));
      if (s > 0) {
        c.try_witness(rx.point, ry.point);
        return +1;
      }
      return s;
    }
    QInterval ix = rx.exact ? QInterval(rx.point) : QInterval(rx.lo, rx.hi);
    QInterval iy = ry.exact ? QInterval(ry.point) : QInterval(ry.lo, ry.hi);
    out_x = ix;
    out_y = iy;
    QInterval v = c.f.eval_interval(ix, iy);
    if (sign(v.hi) < 0) return -1;
    if (sign(v.lo) > 0) {
      c.try_witness(ix.mid(), iy.mid());
      return +1;
    }
    refine_root(ax.squarefree, rx);
    refine_root(ay.squarefree, ry);
  }
  // Deep refinement still straddles zero: confirm an exact zero.  A zero of f
  // at (alpha, beta) forces res_x(A, f) to vanish at beta and res_y(B, f) to
  // vanish at alpha; both are exactly checkable against the isolating
  // intervals.
  bool zy = false, zx = false;
  {
    const UniPoly& ey = elim.elim_y();
    if (!ey.is_zero()) {
      UniPoly g = ey.gcd(ay.squarefree);
      if (g.degree() > 0) zy = !isolate_roots(g, ry.lo, ry.hi).empty();
    }
    const UniPoly& ex = elim.elim_x();
    if (!ex.is_zero()) {
      UniPoly g = ex.gcd(ax.squarefree);
      if (g.degree() > 0) zx = !isolate_roots(g, rx.lo, rx.hi).empty();
    }
  }
  if (zx && zy) return 0;
  throw std::runtime_error("decide_nonpositive: critical-point sign refinement stalled");
}

const UniPoly& ElimCache::elim_y() {
  if (!elim_y_) elim_y_ = resultant_x(bipoly_in_x(ax.squarefree), c.f);
  return *elim_y_;
}

const UniPoly& ElimCache::elim_x() {
  if (!elim_x_) elim_x_ = resultant_y(bipoly_in_y(ay.squarefree), c.f);
  return *elim_x_;
}

/// Processes all candidate pairs for a (reduced) critical system with
/// nondegenerate resultants rx (in x) and ry (in y).  Returns false when a
/// positive witness was installed.
bool analyze_candidates(Ctx& c, const UniPoly& rx, const UniPoly& ry) {
  CandidateAxis ax = isolate_axis(rx, c.box.x_lo, c.box.x_hi);
  CandidateAxis ay = isolate_axis(ry, c.box.y_lo, c.box.y_hi);
  if (ax.roots.empty() || ay.roots.empty()) {
    c.cert.notes.push_back("tier3: no interior critical candidates");
    return true;
  }
  ElimCache elim{c, ax, ay, std::nullopt, std::nullopt};
  for (const auto& rxi : ax.roots) {
    for (const auto& ryj : ay.roots) {
      QInterval ox, oy;
      int s = candidate_sign(c, ax, rxi, ay, ryj, elim, ox, oy);
      if (s > 0) return false;
      CriticalPointEvidence ev;
      ev.x = ox;
      ev.y = oy;
      ev.sign = s;
      ev.note = s == 0 ? "exact zero (resultant-confirmed)" : "strictly negative";
      c.cert.critical_points.push_back(ev);
    }
  }
  return true;
}

/// gcd(f_x, f_y) has positive degree: certify the critical curve lies in the
/// zero set of f, then analyze the reduced isolated system.
bool degenerate_path(Ctx& c, const BiPoly& fx, const BiPoly& fy) {
  BiPoly d = bipoly_gcd(fx, fy);
  if (d.is_constant()) {
    c.cert.notes.push_back("tier3: vanishing resultant without a common factor");
    c.cert.budget_exhausted = true;
    return true;
  }
  BiPoly e = d;
  while (!e.is_constant()) {
    BiPoly g = bipoly_gcd(e, c.f);
    if (g.is_constant()) {
      c.cert.notes.push_back(
          "tier3: critical curve component where f is nonzero (documented limitation)");
      c.cert.budget_exhausted = true;
      return true;
    }
    auto q = e.exact_div(g);
    if (!q) {
      c.cert.notes.push_back("tier3: inexact division in curve reduction");
      c.cert.budget_exhausted = true;
      return true;
    }
    e = *q;
  }
  c.cert.notes.push_back("tier3: critical curve gcd(f_x,f_y) lies in the zero set of f");

  auto u = fx.exact_div(d);
  auto v = fy.exact_div(d);
  if (!u || !v) {
    c.cert.notes.push_back("tier3: inexact division by gcd(f_x,f_y)");
    c.cert.budget_exhausted = true;
    return true;
  }
  if (u->is_zero() || v->is_zero()) {
    // All critical points lie on the certified curve.
    return true;
  }
  if (u->is_constant() || v->is_constant()) {
    // One reduced factor never vanishes away from the curve when constant
    // nonzero; remaining critical set is just the curve.
    return true;
  }
  UniPoly rx = resultant_y(*u, *v);
  UniPoly ry = resultant_x(*u, *v);
  if (rx.is_zero() || ry.is_zero()) {
    c.cert.notes.push_back(
        "tier3: reduced critical system still degenerate (documented limitation)");
    c.cert.budget_exhausted = true;
    return true;
  }
  return analyze_candidates(c, rx, ry);
}

/// Exact interior critical-point elimination.  Relies on the fact that the
/// max of f over the closed box is attained on an edge (certified exactly in
/// tier 1) or at an interior critical point.  Returns false when a positive
/// witness was installed.
bool tier3_critical_points(Ctx& c) {
  BiPoly fx = c.f.partial(Axis::X);
  BiPoly fy = c.f.partial(Axis::Y);
  if (fx.is_zero() || fy.is_zero()) {
    // f depends on one variable only; the edge certificates already cover it.
    c.cert.notes.push_back("tier3: univariate dependence, edges decide");
    return true;
  }
  UniPoly rx = resultant_y(fx, fy);
  UniPoly ry = resultant_x(fx, fy);
  if (rx.is_zero() || ry.is_zero()) return degenerate_path(c, fx, fy);
  return analyze_candidates(c, rx, ry);
}

}  // namespace

SignCertificate decide_nonpositive(const BiPoly& f, const Box& box,
                                   const DecideOptions& opts) {
  Ctx c{f, box, opts, {}, false};
  if (f.is_zero()) {
    c.cert.verdict = Verdict::Nonpositive;
    c.cert.notes.push_back("zero polynomial");
    return c.cert;
  }

  if (!check_edges(c)) return c.cert;

  bool decided = false;
  if (!diagonal_fast_path(c, decided)) return c.cert;
  if (decided) {
    c.cert.verdict = Verdict::Nonpositive;
    return c.cert;
  }

  coarse_positive_scan(c, 6);
  if (c.positive_found) return c.cert;

  std::vector<Box> stalled;
  if (!bernstein_tier(c, stalled)) return c.cert;
  std::sort(stalled.begin(), stalled.end(), [](const Box& a, const Box& b) {
    if (a.x_lo != b.x_lo) return a.x_lo < b.x_lo;
    return a.y_lo < b.y_lo;
  });
  if (stalled.empty()) {
    c.cert.verdict = Verdict::Nonpositive;
    return c.cert;
  }

  if (!opts.tier3) {
    c.cert.budget_exhausted = true;
    c.cert.notes.push_back("budget exhausted with tier 3 disabled: treat as unknown");
    return c.cert;
  }

  if (!tier3_critical_points(c)) return c.cert;
  if (!c.cert.budget_exhausted) c.cert.verdict = Verdict::Nonpositive;
  return c.cert;
}

double float_max_estimate(const BiPoly& f, const Box& box, int grid) {
  if (grid < 2) throw std::invalid_argument("float_max_estimate: grid >= 2 required");
  bool first = true;
  Rat best(0);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      Rat x = box.x_lo + box.width_x() * make_rat(i, grid - 1);
      Rat y = box.y_lo + box.width_y() * make_rat(j, grid - 1);
      Rat v = f.eval(x, y);
      if (first || v > best) best = v;
      first = false;
    }
  }
  return to_double(best);
}

bool SignCertificate::operator==(const SignCertificate& o) const {
  auto box_eq = [](const Box& a, const Box& b) {
    return a.x_lo == b.x_lo && a.x_hi == b.x_hi && a.y_lo == b.y_lo && a.y_hi == b.y_hi;
  };
  if (verdict != o.verdict || budget_exhausted != o.budget_exhausted ||
      witness.has_value() != o.witness.has_value() || notes != o.notes)
    return false;
  if (witness && *witness != *o.witness) return false;
  if (edges.size() != o.edges.size() || leaves.size() != o.leaves.size() ||
      critical_points.size() != o.critical_points.size())
    return false;
  for (size_t i = 0; i < edges.size(); ++i) {
    const auto &a = edges[i], &b = o.edges[i];
    if (a.edge != b.edge || a.all_nonpositive != b.all_nonpositive ||
        a.witness != b.witness)
      return false;
  }
  for (size_t i = 0; i < leaves.size(); ++i)
    if (!box_eq(leaves[i].box, o.leaves[i].box)) return false;
  for (size_t i = 0; i < critical_points.size(); ++i) {
    const auto &a = critical_points[i], &b = o.critical_points[i];
    if (a.sign != b.sign || a.note != b.note || a.x.lo != b.x.lo || a.x.hi != b.x.hi ||
        a.y.lo != b.y.lo || a.y.hi != b.y.hi)
      return false;
  }
  return true;
}

SignCertificate SignCertificate::from_json(const std::string& json) {
  auto j = nlohmann::json::parse(json);
  SignCertificate c;
  c.verdict = j.at("verdict") == "positive" ? Verdict::Positive : Verdict::Nonpositive;
  if (!j.at("witness").is_null())
    c.witness = {{rat_from_string(j["witness"].at("x").get<std::string>()),
                  rat_from_string(j["witness"].at("y").get<std::string>())}};
  for (const auto& e : j.at("edges")) {
    EdgeEvidence ev;
    ev.edge = e.at("edge").get<std::string>();
    ev.all_nonpositive = e.at("all_nonpositive").get<bool>();
    if (e.contains("witness"))
      ev.witness = {{rat_from_string(e["witness"].at("x").get<std::string>()),
                     rat_from_string(e["witness"].at("y").get<std::string>())}};
    c.edges.push_back(std::move(ev));
  }
  for (const auto& l : j.at("leaves")) {
    c.leaves.push_back({Box(rat_from_string(l.at(0).get<std::string>()),
                            rat_from_string(l.at(1).get<std::string>()),
                            rat_from_string(l.at(2).get<std::string>()),
                            rat_from_string(l.at(3).get<std::string>()))});
  }
  for (const auto& p : j.at("critical_points")) {
    CriticalPointEvidence ev;
    ev.x = QInterval(rat_from_string(p.at("x").at(0).get<std::string>()),
                     rat_from_string(p.at("x").at(1).get<std::string>()));
    ev.y = QInterval(rat_from_string(p.at("y").at(0).get<std::string>()),
                     rat_from_string(p.at("y").at(1).get<std::string>()));
    ev.sign = p.at("sign").get<int>();
    ev.note = p.at("note").get<std::string>();
    c.critical_points.push_back(std::move(ev));
  }
  c.budget_exhausted = j.at("budget_exhausted").get<bool>();
  if (j.contains("notes"))
    for (const auto& n : j["notes"]) c.notes.push_back(n.get<std::string>());
  return c;
}

std::string SignCertificate::to_json() const {
  nlohmann::json j;
  j["verdict"] = verdict == Verdict::Nonpositive ? "nonpositive" : "positive";
  if (witness)
    j["witness"] = {{"x", to_string(witness->first)}, {"y", to_string(witness->second)}};
  else
    j["witness"] = nullptr;
  auto box_json = [](const Box& b) {
    return nlohmann::json{to_string(b.x_lo), to_string(b.x_hi), to_string(b.y_lo),
                          to_string(b.y_hi)};
  };
  j["leaves"] = nlohmann::json::array();
  for (const auto& l : leaves) j["leaves"].push_back(box_json(l.box));
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges) {
    nlohmann::json ej{{"edge", e.edge}, {"all_nonpositive", e.all_nonpositive}};
    if (e.witness)
      ej["witness"] = {{"x", to_string(e.witness->first)},
                       {"y", to_string(e.witness->second)}};
    j["edges"].push_back(ej);
  }
  j["critical_points"] = nlohmann::json::array();
  for (const auto& cp : critical_points) {
    j["critical_points"].push_back(
        {{"x", {to_string(cp.x.lo), to_string(cp.x.hi)}},
         {"y", {to_string(cp.y.lo), to_string(cp.y.hi)}},
         {"sign", cp.sign},
         {"note", cp.note}});
  }
  j["budget_exhausted"] = budget_exhausted;
  if (!notes.empty()) j["notes"] = notes;
  return j.dump();
}

}  // namespace apc
