#include "apc/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace apc {

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& v) {
  UniPoly p;
  if (v != 0) p.c_ = {v};
  return p;
}

UniPoly UniPoly::monomial(int deg, const Rat& coeff) {
  UniPoly p;
  if (coeff != 0) {
    p.c_.assign(deg + 1, Rat(0));
    p.c_[deg] = coeff;
  }
  return p;
}

const Rat& UniPoly::lead() const {
  if (c_.empty()) throw std::domain_error("lead of zero polynomial");
  return c_.back();
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (s == 0) return UniPoly();
  UniPoly r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QInterval UniPoly::eval_interval(const QInterval& x) const {
  QInterval acc{Rat(0), Rat(0)};
  for (size_t i = 0; i < c_.size(); ++i)
    acc = acc + scale(c_[i], x.pow(static_cast<unsigned>(i)));
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  UniPoly q, r = *this;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Rat f = r.lead() / d.lead();
    UniPoly t = UniPoly::monomial(k, f);
    q = q + t;
    r = r - t * d;
  }
  return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  Int l(1);
  for (const auto& v : c_) l = lcm(l, v.get_den());
  Int g(0);
  for (const auto& v : c_) g = apc::gcd(g, Int(v.get_num() * (l / v.get_den())));
  Rat s = make_rat(l, g);
  if (sign(lead()) < 0) s = -s;
  return *this * s;
}

UniPoly UniPoly::gcd(const UniPoly& o) const {
  UniPoly a = *this, b = o;
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = b;
    b = r.primitive();  // positive rescaling, harmless for a gcd
  }
  return a.primitive();
}

UniPoly UniPoly::squarefree_part() const {
  if (is_zero() || degree() == 0) return primitive();
  UniPoly g = gcd(derivative());
  if (g.degree() == 0) return primitive();
  return exact_div(g).primitive();
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat v = coeff(i);
    if (v == 0) continue;
    if (!first) os << (sign(v) > 0 ? " + " : " - ");
    else if (sign(v) < 0) os << "-";
    Rat a = abs(v);
    if (a != 1 || i == 0) os << apc::to_string(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::vector<UniPoly> sturm_chain(const UniPoly& squarefree) {
  std::vector<UniPoly> chain;
  if (squarefree.is_zero()) return chain;
  chain.push_back(squarefree);
  UniPoly d = squarefree.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const UniPoly& a = chain[chain.size() - 2];
    const UniPoly& b = chain.back();
    UniPoly r = a.divmod(b).second;
    if (r.is_zero()) break;
    Rat scale = r.primitive().lead() / r.lead();  // positive content strip
    if (sign(scale) < 0) scale = -scale;
    chain.push_back(-(r * scale));
  }
  return chain;
}

namespace {

int sign_variations(const std::vector<UniPoly>& chain, const Rat& x) {
  int vars = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

}  // namespace

int sturm_count(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b) {
  if (chain.empty()) return 0;
  return sign_variations(chain, a) - sign_variations(chain, b);
}

namespace {

/// Widens an exclusion radius around a known rational root m until (m-w, m+w)
/// contains no other root.
Rat exclusion_radius(const UniPoly& g, const std::vector<UniPoly>& chain, const Rat& m,
                     Rat w) {
  while (true) {
    Rat a = m - w, b = m + w;
    if (g.eval(a) != 0 && g.eval(b) != 0 && sturm_count(chain, a, b) == 1) return w;
    w /= 2;
  }
}

void isolate_rec(const UniPoly& g, const std::vector<UniPoly>& chain, const Rat& a,
                 const Rat& b, std::vector<RootInterval>& out) {
  int n = sturm_count(chain, a, b);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({a, b, false, Rat(0)});
    return;
  }
  Rat m = (a + b) / 2;
  if (g.eval(m) == 0) {
    Rat w = exclusion_radius(g, chain, m, (b - a) / 16);
    isolate_rec(g, chain, a, m - w, out);
    out.push_back({m - w, m + w, true, m});
    isolate_rec(g, chain, m + w, b, out);
  } else {
    isolate_rec(g, chain, a, m, out);
    isolate_rec(g, chain, m, b, out);
  }
}

}  // namespace

std::vector<RootInterval> isolate_roots(const UniPoly& g, const Rat& lo, const Rat& hi,
                                        const Rat& max_width) {
  std::vector<RootInterval> out;
  if (g.is_zero() || lo > hi) return out;
  UniPoly sf = g.squarefree_part();
  if (sf.degree() <= 0) return out;
  if (lo == hi) {
    if (sf.eval(lo) == 0) out.push_back({lo, hi, true, lo});
    return out;
  }
  auto chain = sturm_chain(sf);

  Rat a = lo, b = hi;
  // Exact roots at the endpoints are emitted directly and excluded from the
  // Sturm interval so the (a, b] counting convention stays valid.
  if (sf.eval(a) == 0) {
    Rat w = exclusion_radius(sf, chain, a, (b - a) / 16);
    out.push_back({a, a + w, true, a});
    a = a + w;
  }
  bool hi_root = false;
  RootInterval hi_iv;
  if (sf.eval(b) == 0) {
    Rat w = exclusion_radius(sf, chain, b, (b - a) / 16);
    hi_iv = {b - w, b, true, b};
    hi_root = true;
    b = b - w;
  }
  isolate_rec(sf, chain, a, b, out);
  if (hi_root) out.push_back(hi_iv);
  if (sign(max_width) > 0)
    for (auto& r : out)
      while (!r.exact && r.hi - r.lo > max_width) refine_root(sf, r);
  return out;
}

void refine_root(const UniPoly& squarefree, RootInterval& r) {
  if (r.exact) return;
  Rat m = (r.lo + r.hi) / 2;
  Rat vm = squarefree.eval(m);
  if (vm == 0) {
    r.exact = true;
    r.point = m;
    // keep a thin bracket around the exact point for interval consumers
    Rat w = (r.hi - r.lo) / 4;
    r.lo = m - w;
    r.hi = m + w;
    return;
  }
  // Simple root: sign change between endpoints.
  if (sign(squarefree.eval(r.lo)) * sign(vm) < 0)
    r.hi = m;
  else
    r.lo = m;
}

void refine_root_to_width(const UniPoly& squarefree, RootInterval& r, const Rat& w) {
  while (!r.exact && r.hi - r.lo > w) refine_root(squarefree, r);
  if (r.exact && r.hi - r.lo > w) {
    r.lo = r.point - w / 2;
    r.hi = r.point + w / 2;
  }
}

SturmDecision sturm_decide(const UniPoly& g, const Rat& lo, const Rat& hi) {
  if (lo >= hi) throw std::invalid_argument("sturm_decide: lo < hi required");
  SturmDecision d;
  if (g.is_zero()) {
    d.all_nonpositive = true;
    return d;
  }

  auto check = [&](const Rat& x) -> bool {
    if (sign(g.eval(x)) > 0) {
      d.all_nonpositive = false;
      d.witness = x;
      return true;
    }
    return false;
  };

  if (check(lo) || check(hi)) return d;

  // Roots of g split [lo, hi] into finitely many sign-constant open regions.
  // Each region's sign shows up either at an isolating-interval endpoint
  // (where g != 0 by construction, except exact endpoint roots) or at a gap
  // midpoint, so checking all of them decides the question.
  auto roots = isolate_roots(g, lo, hi);
  std::vector<Rat> cuts;
  cuts.push_back(lo);
  for (const auto& r : roots) {
    cuts.push_back(r.lo);
    cuts.push_back(r.hi);
  }
  cuts.push_back(hi);
  for (const auto& x : cuts)
    if (check(x)) return d;
  for (size_t i = 0; i + 1 < cuts.size(); i += 2) {
    const Rat& a = cuts[i];
    const Rat& b = cuts[i + 1];
    if (a >= b) continue;
    if (check((a + b) / 2)) return d;
  }
  d.all_nonpositive = true;
  return d;
}

}  // namespace apc
