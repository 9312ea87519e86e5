#include "apc/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace apc {

BiPoly BiPoly::constant(const Rat& v) { return monomial(0, 0, v); }

BiPoly BiPoly::monomial(int i, int j, const Rat& c) {
  BiPoly p;
  if (c != 0) p.t_[{i, j}] = c;
  return p;
}

bool BiPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0});
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.second);
  return d;
}

Rat BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Rat(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, v] : r.t_) v = -v;
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, v] : o.t_) r.add_term(k.first, k.second, v);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [ka, va] : t_)
    for (const auto& [kb, vb] : o.t_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
  return r;
}

BiPoly BiPoly::operator*(const Rat& s) const {
  if (s == 0) return BiPoly();
  BiPoly r = *this;
  for (auto& [k, v] : r.t_) v *= s;
  return r;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  // Collect powers once; exponents are small.
  int dx = degree_x(), dy = degree_y();
  std::vector<Rat> xp(std::max(dx, 0) + 1, Rat(1)), yp(std::max(dy, 0) + 1, Rat(1));
  for (int i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * x;
  for (int j = 1; j <= dy; ++j) yp[j] = yp[j - 1] * y;
  Rat acc(0);
  for (const auto& [k, v] : t_) acc += v * xp[k.first] * yp[k.second];
  return acc;
}

double BiPoly::eval_double(double x, double y) const {
  double acc = 0;
  for (const auto& [k, v] : t_)
    acc += to_double(v) * std::pow(x, k.first) * std::pow(y, k.second);
  return acc;
}

QInterval BiPoly::eval_interval(const QInterval& x, const QInterval& y) const {
  QInterval acc{Rat(0), Rat(0)};
  for (const auto& [k, v] : t_)
    acc = acc + scale(v, x.pow(k.first) * y.pow(k.second));
  return acc;
}

BiPoly BiPoly::partial(Axis a) const {
  BiPoly r;
  for (const auto& [k, v] : t_) {
    if (a == Axis::X && k.first > 0)
      r.add_term(k.first - 1, k.second, v * Rat(k.first));
    else if (a == Axis::Y && k.second > 0)
      r.add_term(k.first, k.second - 1, v * Rat(k.second));
  }
  return r;
}

UniPoly BiPoly::edge_restrict(Edge e) const {
  // Restriction to x=0/x=1 leaves a polynomial in y; y=0/y=1 leaves one in x.
  std::map<int, Rat> acc;
  for (const auto& [k, v] : t_) {
    switch (e) {
      case Edge::X0:
        if (k.first == 0) acc[k.second] += v;
        break;
      case Edge::X1:
        acc[k.second] += v;
        break;
      case Edge::Y0:
        if (k.second == 0) acc[k.first] += v;
        break;
      case Edge::Y1:
        acc[k.first] += v;
        break;
    }
  }
  int deg = acc.empty() ? -1 : acc.rbegin()->first;
  std::vector<Rat> c(deg + 1, Rat(0));
  for (const auto& [i, v] : acc) c[i] = v;
  return UniPoly(std::move(c));
}

BiPoly BiPoly::subst_affine(Axis which, const Rat& a, const Rat& b) const {
  BiPoly r;
  for (const auto& [k, v] : t_) {
    int e = (which == Axis::X) ? k.first : k.second;
    // (a + b t)^e by repeated multiplication; e <= 4 in practice.
    std::vector<Rat> pow(1, Rat(1));
    for (int s = 0; s < e; ++s) {
      std::vector<Rat> nxt(pow.size() + 1, Rat(0));
      for (size_t d = 0; d < pow.size(); ++d) {
        nxt[d] += pow[d] * a;
        nxt[d + 1] += pow[d] * b;
      }
      pow = std::move(nxt);
    }
    for (size_t d = 0; d < pow.size(); ++d) {
      if (pow[d] == 0) continue;
      if (which == Axis::X)
        r.add_term(static_cast<int>(d), k.second, v * pow[d]);
      else
        r.add_term(k.first, static_cast<int>(d), v * pow[d]);
    }
  }
  return r;
}

BiPoly BiPoly::swap_xy() const {
  BiPoly r;
  for (const auto& [k, v] : t_) r.add_term(k.second, k.first, v);
  return r;
}

bool BiPoly::is_diagonal_support() const {
  for (const auto& [k, v] : t_)
    if (k.first != k.second) return false;
  return true;
}

UniPoly BiPoly::diagonal_profile() const {
  if (!is_diagonal_support())
    throw std::domain_error("diagonal_profile: support is not diagonal");
  int d = degree_x();
  std::vector<Rat> c(std::max(d, 0) + 1, Rat(0));
  for (const auto& [k, v] : t_) c[k.first] = v;
  return UniPoly(std::move(c));
}

std::vector<UniPoly> BiPoly::y_coeffs() const {
  int dy = degree_y();
  std::vector<std::vector<Rat>> rows(dy + 1);
  int dx = degree_x();
  for (auto& row : rows) row.assign(std::max(dx, 0) + 1, Rat(0));
  for (const auto& [k, v] : t_) rows[k.second][k.first] = v;
  std::vector<UniPoly> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.emplace_back(std::move(row));
  return out;
}

BiPoly BiPoly::from_y_coeffs(const std::vector<UniPoly>& c) {
  BiPoly r;
  for (size_t j = 0; j < c.size(); ++j)
    for (int i = 0; i <= c[j].degree(); ++i)
      r.add_term(i, static_cast<int>(j), c[j].coeff(i));
  return r;
}

std::optional<BiPoly> BiPoly::exact_div(const BiPoly& o) const {
  if (o.is_zero()) throw std::domain_error("exact_div by zero polynomial");
  if (is_zero()) return BiPoly();
  // Classical division in Q(x)[y]; if the true quotient is polynomial every
  // leading-coefficient division below is exact in Q[x].
  auto rem = y_coeffs();
  auto div = o.y_coeffs();
  int dr = static_cast<int>(rem.size()) - 1;
  int dd = static_cast<int>(div.size()) - 1;
  while (dr >= 0 && rem[dr].is_zero()) --dr;
  while (dd >= 0 && div[dd].is_zero()) --dd;
  if (dd < 0) throw std::domain_error("exact_div by zero polynomial");
  if (dr < dd) {
    // Quotient must be y-degree < 0 unless dividend is zero.
    return std::nullopt;
  }
  std::vector<UniPoly> quot(dr - dd + 1);
  for (int k = dr - dd; k >= 0; --k) {
    UniPoly lead = rem[k + dd];
    if (lead.is_zero()) {
      quot[k] = UniPoly::zero();
      continue;
    }
    UniPoly q;
    try {
      q = lead.exact_div(div[dd]);
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
    quot[k] = q;
    for (int j = 0; j <= dd; ++j) rem[k + j] = rem[k + j] - q * div[j];
  }
  for (const auto& r : rem)
    if (!r.is_zero()) return std::nullopt;
  return from_y_coeffs(quot);
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : t_) {
    if (!first) os << (sign(v) > 0 ? " + " : " - ");
    else if (sign(v) < 0) os << "-";
    Rat a = abs(v);
    bool unit = (a == 1) && (k.first > 0 || k.second > 0);
    if (!unit) os << apc::to_string(a);
    if (k.first > 0) {
      if (!unit) os << "*";
      os << "x";
      if (k.first > 1) os << "^" << k.first;
      unit = false;
    }
    if (k.second > 0) {
      if (!unit || k.first > 0) os << (k.first > 0 ? "*" : (a == 1 ? "" : "*"));
      os << "y";
      if (k.second > 1) os << "^" << k.second;
    }
    first = false;
  }
  return os.str();
}

std::string BiPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, v] : t_) {
    terms.push_back({{"i", k.first},
                     {"j", k.second},
                     {"num", v.get_num().get_str()},
                     {"den", v.get_den().get_str()}});
  }
  nlohmann::json j;
  j["terms"] = terms;
  return j.dump();
}

BiPoly BiPoly::from_json(const std::string& json) {
  auto j = nlohmann::json::parse(json);
  BiPoly p;
  for (const auto& t : j.at("terms")) {
    Rat c = make_rat(Int(t.at("num").get<std::string>()),
                     Int(t.at("den").get<std::string>()));
    p.add_term(t.at("i").get<int>(), t.at("j").get<int>(), c);
  }
  return p;
}

namespace {

/// Content of a Q[x][y] coefficient list: gcd over Q[x], primitive output.
UniPoly content_of(const std::vector<UniPoly>& c) {
  UniPoly g = UniPoly::zero();
  for (const auto& p : c) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.primitive() : g.gcd(p);
    if (g.degree() == 0) return UniPoly::constant(Rat(1));
  }
  return g;
}

std::vector<UniPoly> divide_all(const std::vector<UniPoly>& c, const UniPoly& d) {
  std::vector<UniPoly> out;
  out.reserve(c.size());
  for (const auto& p : c) out.push_back(p.is_zero() ? p : p.exact_div(d));
  return out;
}

int top_degree(const std::vector<UniPoly>& c) {
  int d = static_cast<int>(c.size()) - 1;
  while (d >= 0 && c[d].is_zero()) --d;
  return d;
}

/// Pseudo-remainder of a by b in Q[x][y] (both as y-coefficient lists).
std::vector<UniPoly> pseudo_rem(std::vector<UniPoly> a, const std::vector<UniPoly>& b) {
  int da = top_degree(a), db = top_degree(b);
  if (db < 0) throw std::domain_error("pseudo_rem by zero");
  const UniPoly& lb = b[db];
  while (da >= db) {
    UniPoly la = a[da];
    // a := lb*a - la*y^(da-db)*b
    for (auto& p : a) p = p * lb;
    for (int j = 0; j <= db; ++j)
      a[da - db + j] = a[da - db + j] - la * b[j];
    int nd = da - 1;
    while (nd >= 0 && a[nd].is_zero()) --nd;
    a.resize(std::max(nd + 1, 0));
    da = nd;
    if (da < db) break;
  }
  return a;
}

}  // namespace

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Ensure both are honest polynomials in y; fall back to the swapped
  // orientation when one input is y-free so contents stay meaningful.
  if (a.degree_y() == 0 && b.degree_y() == 0) {
    // Both in Q[x]: univariate gcd.
    UniPoly g = a.y_coeffs()[0].gcd(b.y_coeffs()[0]);
    BiPoly r;
    for (int i = 0; i <= g.degree(); ++i) r.add_term(i, 0, g.coeff(i));
    return r;
  }

  auto ca = a.y_coeffs();
  auto cb = b.y_coeffs();
  UniPoly cont_a = content_of(ca);
  UniPoly cont_b = content_of(cb);
  UniPoly cont_g = cont_a.gcd(cont_b);

  auto pa = divide_all(ca, cont_a);
  auto pb = divide_all(cb, cont_b);

  // Primitive PRS.
  std::vector<UniPoly> u = top_degree(pa) >= top_degree(pb) ? pa : pb;
  std::vector<UniPoly> v = top_degree(pa) >= top_degree(pb) ? pb : pa;
  while (true) {
    int dv = top_degree(v);
    if (dv < 0) break;
    auto r = pseudo_rem(u, v);
    if (top_degree(r) < 0) {
      u = v;
      v = r;
      break;
    }
    UniPoly c = content_of(r);
    r = divide_all(r, c);
    u = v;
    v = r;
  }
  // u holds the primitive gcd of the primitive parts.
  int du = top_degree(u);
  std::vector<UniPoly> g(du + 1);
  for (int j = 0; j <= du; ++j) g[j] = u[j];
  BiPoly pp = BiPoly::from_y_coeffs(g);
  BiPoly cont;
  for (int i = 0; i <= cont_g.degree(); ++i) cont.add_term(i, 0, cont_g.coeff(i));
  BiPoly out = pp * cont;
  // Deterministic normalization: positive leading term in (i, j) order.
  if (!out.is_zero() && sign(out.terms().rbegin()->second) < 0) out = -out;
  return out;
}

namespace {

/// Bareiss fraction-free determinant over Q[x]; exact divisions guaranteed.
UniPoly bareiss_det(std::vector<std::vector<UniPoly>> m) {
  size_t n = m.size();
  if (n == 0) return UniPoly::constant(Rat(1));
  UniPoly prev = UniPoly::constant(Rat(1));
  int sign_flips = 0;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return UniPoly::zero();
      std::swap(m[k], m[swap_row]);
      ++sign_flips;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        UniPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = t.exact_div(prev);
      }
      m[i][k] = UniPoly::zero();
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return (sign_flips % 2) ? -det : det;
}

}  // namespace

UniPoly resultant_y(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("resultant_y: zero polynomial input");
  auto ca = a.y_coeffs();
  auto cb = b.y_coeffs();
  int m = top_degree(ca), n = top_degree(cb);
  if (m == 0 && n == 0) return UniPoly::constant(Rat(1));
  if (m == 0) {
    // res(a, b) = a^deg(b)
    UniPoly r = UniPoly::constant(Rat(1));
    for (int k = 0; k < n; ++k) r = r * ca[0];
    return r;
  }
  if (n == 0) {
    UniPoly r = UniPoly::constant(Rat(1));
    for (int k = 0; k < m; ++k) r = r * cb[0];
    return r;
  }
  size_t dim = static_cast<size_t>(m + n);
  std::vector<std::vector<UniPoly>> s(dim, std::vector<UniPoly>(dim, UniPoly::zero()));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) s[row][row + (m - k)] = ca[k];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) s[n + row][row + (n - k)] = cb[k];
  return bareiss_det(std::move(s));
}

UniPoly resultant_x(const BiPoly& a, const BiPoly& b) {
  return resultant_y(a.swap_xy(), b.swap_xy());
}

}  // namespace apc
