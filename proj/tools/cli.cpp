#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "apc/geomcheck.hpp"
#include "apc/topology.hpp"
#include "apc/torus.hpp"

namespace apc::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int thread_count(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("APCLAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // library default: hardware concurrency
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

json classification_json(const Classification& c) {
  json j;
  j["verdict"] = to_string(c.verdict);
  j["provenance"] = to_string(c.provenance);
  j["detail"] = c.detail;
  if (c.certificate && c.certificate->witness)
    j["witness"] = {{"x", to_string(c.certificate->witness->first)},
                    {"y", to_string(c.certificate->witness->second)}};
  return j;
}

json row_json(const ScanRow& r) {
  json j;
  j["p"] = to_string(r.t.p);
  j["q1"] = to_string(r.t.q1);
  j["q2"] = to_string(r.t.q2);
  j["theorem"] = to_string(r.theorem_verdict);
  j["poly"] = to_string(r.poly_verdict);
  j["agree"] = r.agree;
  if (r.witness)
    j["witness"] = {{"x", to_string(r.witness->first)}, {"y", to_string(r.witness->second)}};
  return j;
}

int cmd_classify(const Triple& t, const std::string& method, int budget, bool as_json) {
  DecideOptions opts;
  opts.budget = budget;
  std::optional<Classification> th, po;
  if (method == "theorem" || method == "both") th = classify_theorem(t);
  if (method == "poly" || method == "both") po = classify_polynomial(t, opts);
  if (as_json) {
    json j;
    j["p"] = to_string(t.p);
    j["q1"] = to_string(t.q1);
    j["q2"] = to_string(t.q2);
    if (th) j["theorem"] = classification_json(*th);
    if (po) j["poly"] = classification_json(*po);
    if (th && po) j["agree"] = th->verdict == po->verdict;
    std::cout << j.dump() << "\n";
  } else {
    if (th)
      std::cout << "theorem: " << to_string(th->verdict) << " (" << th->detail << ")\n";
    if (po) std::cout << "poly: " << to_string(po->verdict) << " (" << po->detail << ")\n";
  }
  if (th && po && th->verdict != po->verdict) return kExitMismatch;
  return kExitOk;
}

int cmd_certify(const Triple& t, int budget, const std::string& out_path) {
  DecideOptions opts;
  opts.budget = budget;
  SignCertificate cert = decide_nonpositive(build_f(t), Box(), opts);
  std::ofstream file;
  std::ostream& os = open_output(file, out_path);
  os << cert.to_json() << "\n";
  return cert.budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_scan(int bound, int budget, int threads, const std::string& format,
             const std::string& out_path) {
  DecideOptions opts;
  opts.budget = budget;
  ScanReport rep = cross_validate(bound, opts, thread_count(threads));
  std::ofstream file;
  std::ostream& os = open_output(file, out_path);
  if (format == "csv") {
    os << "p,q1,q2,theorem,poly,agree\n";
    for (const auto& r : rep.rows)
      os << to_string(r.t.p) << "," << to_string(r.t.q1) << "," << to_string(r.t.q2)
         << "," << to_string(r.theorem_verdict) << "," << to_string(r.poly_verdict)
         << "," << (r.agree ? "true" : "false") << "\n";
  } else {
    for (const auto& r : rep.rows) os << row_json(r).dump() << "\n";
  }
  json summary;
  summary["triples"] = rep.rows.size();
  summary["skipped_inadmissible"] = rep.skipped_inadmissible;
  summary["mismatches"] = rep.mismatches;
  summary["table_audit_flags"] = json::array();
  for (const auto& e : rep.audit) {
    summary["table_audit_flags"].push_back(
        {{"i", e.i},
         {"j", e.j},
         {"status", e.status == AuditStatus::CorruptSource ? "corrupt_source"
                                                           : "value_mismatch"},
         {"note", e.note}});
  }
  std::cerr << summary.dump() << "\n";
  return rep.mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_invariants(int n, const Triple& t, bool as_json) {
  SpaceInvariants s = invariants(n, t);
  if (as_json) {
    json j;
    j["n"] = s.n;
    j["dim"] = s.dim;
    j["ell"] = to_string(s.ell);
    if (s.ell_nonzero)
      j["h2n_order"] = to_string(Int(abs(s.ell)));
    else
      j["h2n_order"] = nullptr;  // ell = 0: order not determined by this formula
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "dim = " << s.dim << "\n";
    std::cout << "ell = " << to_string(s.ell) << "\n";
    if (s.ell_nonzero)
      std::cout << "|H^2n| = " << to_string(Int(abs(s.ell))) << "\n";
    else
      std::cout << "|H^2n| undetermined (ell = 0)\n";
  }
  return kExitOk;
}

json inhom_json(const InhomogeneityCertificate& c) {
  json j;
  j["n"] = c.n;
  j["ell"] = to_string(c.ell_value);
  switch (c.variant) {
    case InhomVariant::ParityCertificate:
      j["variant"] = "parity";
      break;
    case InhomVariant::PrimeMod4Certificate:
      j["variant"] = "prime_mod4";
      j["prime"] = to_string(c.prime);
      j["primality_method"] = c.primality_method;
      break;
    case InhomVariant::BoundedSearchOnly:
      j["variant"] = "bounded_search_only";
      j["bound"] = c.search_bound;
      j["conclusive"] = false;
      if (c.match_found)
        j["match"] = {to_string(c.match_found->first), to_string(c.match_found->second)};
      else
        j["match"] = nullptr;
      break;
  }
  return j;
}

int cmd_inhom(int n, const Triple& t, int bound, bool as_json) {
  InhomogeneityCertificate c = inhomogeneity_certificate(n, t, bound);
  if (as_json) {
    std::cout << inhom_json(c).dump() << "\n";
  } else {
    json j = inhom_json(c);
    std::cout << "n = " << n << ", ell = " << to_string(c.ell_value) << "\n";
    std::cout << "certificate: " << j["variant"].get<std::string>() << "\n";
    if (c.variant == InhomVariant::PrimeMod4Certificate)
      std::cout << "prime = " << to_string(c.prime) << " (" << c.primality_method << ")\n";
    if (c.variant == InhomVariant::BoundedSearchOnly) {
      std::cout << "bounded search up to " << c.search_bound
                << (c.match_found ? ": homogeneous ell-match found" : ": no match")
                << " (not conclusive)\n";
    }
  }
  return kExitOk;
}

int cmd_inhom_search(int n, int count, bool as_json) {
  auto ps = prime_search(n, count);
  if (as_json) {
    json j = json::array();
    for (const auto& p : ps) j.push_back(to_string(p));
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& p : ps) std::cout << to_string(p) << "\n";
  }
  return kExitOk;
}

int cmd_torus_enumerate(int bound, bool as_json) {
  EnumerationReport rep = enumerate_free(bound);
  if (as_json) {
    json j;
    j["bound"] = bound;
    j["tested"] = rep.tested;
    j["free"] = rep.free_count;
    j["canonical"] = json::array();
    for (const auto& a : rep.canonical)
      j["canonical"].push_back({a.p, a.q1, a.q2, a.s1, a.s2});
    j["non_canonical"] = json::array();
    for (const auto& a : rep.non_canonical)
      j["non_canonical"].push_back({a.p, a.q1, a.q2, a.s1, a.s2});
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "free actions (up to equivalence):\n";
    for (const auto& a : rep.canonical) std::cout << "  " << a.str() << "\n";
    if (!rep.non_canonical.empty()) {
      std::cout << "survivors not reduced to canonical form:\n";
      for (const auto& a : rep.non_canonical) std::cout << "  " << a.str() << "\n";
    }
  }
  return rep.non_canonical.empty() ? kExitOk : kExitMismatch;
}

int cmd_verify_geometry(const Triple& t, int grid, unsigned long seed, int n,
                        bool as_json) {
  if (!is_admissible(t))
    throw std::invalid_argument("verify-geometry: inadmissible triple " + t.str());
  if (is_excluded_special(t))
    throw std::invalid_argument(
        "verify-geometry: the polynomial criterion excludes " + t.str() +
        "; no plane construction is defined for it");
  MetricParams mp;
  BiPoly f = build_f(t);
  json points = json::array();
  bool ok = true;
  const double tol = 1e-8;
  for (int i = 1; i < grid; ++i) {
    for (int j = 1; j < grid; ++j) {
      Rat x = make_rat(i, grid);
      Rat y = make_rat(j, grid);
      Rat fv = f.eval(x, y);
      json pt;
      pt["x"] = to_string(x);
      pt["y"] = to_string(y);
      pt["f"] = to_string(fv);
      try {
        ConstructedPlane cp = construct_zero_plane(t, x, y, mp, n);
        pt["constructed"] = true;
        pt["max_residual"] = cp.residuals.max_residual();
        if (sign(fv) < 0) {
          pt["consistent"] = false;  // plane exists where f < 0: violation
          ok = false;
        } else {
          bool good = cp.residuals.max_residual() <= tol;
          pt["consistent"] = good;
          ok = ok && good;
        }
      } catch (const PlaneRejection& rej) {
        pt["constructed"] = false;
        pt["reject_reason"] = rej.what();
        bool degenerate = rej.reason == PlaneRejection::Reason::DegenerateDenominator;
        bool good = degenerate || sign(fv) < 0;
        pt["consistent"] = good;
        ok = ok && good;
      }
      points.push_back(pt);
    }
  }
  (void)seed;
  if (as_json) {
    json j;
    j["triple"] = {to_string(t.p), to_string(t.q1), to_string(t.q2)};
    j["grid"] = grid;
    j["n"] = n;
    j["points"] = points;
    j["ok"] = ok;
    std::cout << j.dump() << "\n";
  } else {
    int constructed = 0, rejected = 0;
    for (const auto& pt : points)
      (pt["constructed"].get<bool>() ? constructed : rejected)++;
    std::cout << "grid " << grid << "x" << grid << ": " << constructed
              << " planes constructed, " << rejected << " rejections, "
              << (ok ? "consistent with f" : "INCONSISTENT") << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_verify_a0(bool as_json) {
  A0Report rep = quasipositive_A0_check();
  bool ok = rep.contradiction && rep.printed_solution_residual <= 1e-10;
  if (as_json) {
    json j;
    j["solution_residual"] = rep.printed_solution_residual;
    j["im_y3"] = rep.im_y3_candidates;
    j["re_y3_squared"] = rep.re_y3_squared;
    j["contradiction"] = rep.contradiction;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "solution residual: " << rep.printed_solution_residual << "\n";
    std::cout << "Im(y3) candidates:";
    for (double v : rep.im_y3_candidates) std::cout << " " << v;
    std::cout << "\nRe(y3)^2 values:";
    for (double v : rep.re_y3_squared) std::cout << " " << v;
    std::cout << "\n" << (ok ? "contradiction confirmed: positive curvature at A0" : "CHECK FAILED")
              << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_poly(const Triple& t, bool as_json, int dump_grid, const std::string& out_path) {
  BiPoly f = build_f(t);
  std::optional<BiPoly> g;
  if (t.p != t.q1 + 2 * t.q2) g = build_g(t);
  std::ofstream file;
  std::ostream& os = open_output(file, out_path);
  if (dump_grid >= 2) {
    os << "x,y,f\n";
    for (int i = 0; i < dump_grid; ++i)
      for (int j = 0; j < dump_grid; ++j) {
        Rat x = make_rat(i, dump_grid - 1);
        Rat y = make_rat(j, dump_grid - 1);
        os << to_double(x) << "," << to_double(y) << "," << to_double(f.eval(x, y))
           << "\n";
      }
    return kExitOk;
  }
  if (as_json) {
    json j;
    j["f"] = json::parse(f.to_json());
    if (g) j["g"] = json::parse(g->to_json());
    os << j.dump() << "\n";
  } else {
    os << "f = " << f.to_string() << "\n";
    if (g)
      os << "g = " << g->to_string() << "\n";
    else
      os << "g undefined (p = q1 + 2 q2)\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"exact curvature classification of cohomogeneity-two generalized "
               "Eschenburg spaces"};
  app.require_subcommand(1);

  // classify
  long cp = 0, cq1 = 0, cq2 = 0;
  std::string method = "both";
  int budget = 24;
  bool cjson = false;
  auto* classify = app.add_subcommand("classify", "classify one triple");
  classify->add_option("p", cp)->required();
  classify->add_option("q1", cq1)->required();
  classify->add_option("q2", cq2)->required();
  classify->add_option("--method", method)->check(CLI::IsMember({"theorem", "poly", "both"}));
  classify->add_option("--budget", budget)->check(CLI::PositiveNumber);
  classify->add_flag("--json", cjson);

  // certify
  long ep = 0, eq1 = 0, eq2 = 0;
  int ebudget = 24;
  std::string eout;
  auto* certify = app.add_subcommand("certify", "emit a sign certificate for f");
  certify->add_option("p", ep)->required();
  certify->add_option("q1", eq1)->required();
  certify->add_option("q2", eq2)->required();
  certify->add_option("--budget", ebudget)->check(CLI::PositiveNumber);
  certify->add_option("--output", eout);

  // scan
  int sbound = 8, sbudget = 24, sthreads = 0;
  std::string sformat = "jsonl", sout;
  auto* scan = app.add_subcommand("scan", "cross-validate both classifiers");
  scan->add_option("--bound", sbound)->check(CLI::PositiveNumber);
  scan->add_option("--budget", sbudget)->check(CLI::PositiveNumber);
  scan->add_option("--threads", sthreads);
  scan->add_option("--format", sformat)->check(CLI::IsMember({"jsonl", "csv"}));
  scan->add_option("--output", sout);

  // invariants
  int vn = 2;
  long vp = 0, vq1 = 0, vq2 = 0;
  bool vjson = false;
  auto* inv = app.add_subcommand("invariants", "dimension and ell invariant");
  inv->add_option("n", vn)->required()->check(CLI::Range(2, 1 << 20));
  inv->add_option("p", vp)->required();
  inv->add_option("q1", vq1)->required();
  inv->add_option("q2", vq2)->required();
  inv->add_flag("--json", vjson);

  // inhom
  int hn = 2, hbound = 50;
  long hp = 0, hq1 = 0, hq2 = 0;
  bool hjson = false;
  auto* inhom = app.add_subcommand("inhom", "inhomogeneity certificate");
  inhom->add_option("n", hn)->required()->check(CLI::Range(2, 1 << 20));
  inhom->add_option("p", hp)->required();
  inhom->add_option("q1", hq1)->required();
  inhom->add_option("q2", hq2)->required();
  inhom->add_option("--bound", hbound)->check(CLI::PositiveNumber);
  inhom->add_flag("--json", hjson);

  // inhom-search
  int pn = 3, pcount = 1;
  bool pjson = false;
  auto* psearch = app.add_subcommand("inhom-search", "p values with 4kn-1 prime");
  psearch->add_option("--n", pn)->required();
  psearch->add_option("--count", pcount)->check(CLI::PositiveNumber);
  psearch->add_flag("--json", pjson);

  // torus-enumerate
  int tbound = 5;
  bool tjson = false;
  auto* torus = app.add_subcommand("torus-enumerate", "enumerate free T^2 actions");
  torus->add_option("--bound", tbound)->check(CLI::Range(2, 16));
  torus->add_flag("--json", tjson);

  // verify-geometry
  long gp = 0, gq1 = 0, gq2 = 0;
  int ggrid = 12, gn = 2;
  unsigned long gseed = 0;
  bool gjson = false;
  auto* vgeo = app.add_subcommand("verify-geometry",
                                  "realize zero-curvature planes where f >= 0");
  vgeo->add_option("p", gp)->required();
  vgeo->add_option("q1", gq1)->required();
  vgeo->add_option("q2", gq2)->required();
  vgeo->add_option("--grid", ggrid)->check(CLI::Range(2, 256));
  vgeo->add_option("--seed", gseed);
  vgeo->add_option("--n", gn)->check(CLI::Range(2, 16));
  vgeo->add_flag("--json", gjson);

  // verify-a0
  bool ajson = false;
  auto* va0 = app.add_subcommand("verify-a0", "fixed-point positivity contradiction");
  va0->add_flag("--json", ajson);

  // poly
  long yp = 0, yq1 = 0, yq2 = 0;
  bool yjson = false;
  int ygrid = 0;
  std::string yout;
  auto* poly = app.add_subcommand("poly", "print f and g");
  poly->add_option("p", yp)->required();
  poly->add_option("q1", yq1)->required();
  poly->add_option("q2", yq2)->required();
  poly->add_flag("--json", yjson);
  poly->add_option("--dump-grid", ygrid)->check(CLI::Range(2, 4096));
  poly->add_option("--output", yout);

  std::vector<const char*> argv;
  argv.push_back("apclab");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream dummy;
    int code = app.exit(e, dummy, dummy);
    std::cerr << dummy.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(Triple(cp, cq1, cq2), method, budget, cjson);
    if (certify->parsed()) return cmd_certify(Triple(ep, eq1, eq2), ebudget, eout);
    if (scan->parsed()) return cmd_scan(sbound, sbudget, sthreads, sformat, sout);
    if (inv->parsed()) return cmd_invariants(vn, Triple(vp, vq1, vq2), vjson);
    if (inhom->parsed()) return cmd_inhom(hn, Triple(hp, hq1, hq2), hbound, hjson);
    if (psearch->parsed()) return cmd_inhom_search(pn, pcount, pjson);
    if (torus->parsed()) return cmd_torus_enumerate(tbound, tjson);
    if (vgeo->parsed()) return cmd_verify_geometry(Triple(gp, gq1, gq2), ggrid, gseed, gn, gjson);
    if (va0->parsed()) return cmd_verify_a0(ajson);
    if (poly->parsed()) return cmd_poly(Triple(yp, yq1, yq2), yjson, ygrid, yout);
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace apc::cli
