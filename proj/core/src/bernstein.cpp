#include "apc/bernstein.hpp"

#include <stdexcept>

namespace apc {

Box::Box(Rat xl, Rat xh, Rat yl, Rat yh)
    : x_lo(std::move(xl)), x_hi(std::move(xh)), y_lo(std::move(yl)), y_hi(std::move(yh)) {
  if (x_lo >= x_hi || y_lo >= y_hi)
    throw std::invalid_argument("Box: requires x_lo < x_hi and y_lo < y_hi");
}

bool Box::contains(const Rat& x, const Rat& y) const {
  return x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi;
}

namespace {

Rat binom(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(r);
}

}  // namespace

BernsteinPatch BernsteinPatch::from(const BiPoly& f, const Box& box) {
  // Map the box to local coordinates, then convert the power basis to the
  // Bernstein basis of the same bidegree.
  BiPoly local = f.subst_affine(Axis::X, box.x_lo, box.width_x())
                     .subst_affine(Axis::Y, box.y_lo, box.width_y());
  int m = std::max(local.degree_x(), 0);
  int n = std::max(local.degree_y(), 0);
  BernsteinPatch p(box, m, n);
  p.b_.assign(static_cast<size_t>(m + 1) * (n + 1), Rat(0));
  for (int k = 0; k <= m; ++k) {
    for (int l = 0; l <= n; ++l) {
      Rat acc(0);
      for (int i = 0; i <= k; ++i) {
        for (int j = 0; j <= l; ++j) {
          Rat c = local.coeff(i, j);
          if (c == 0) continue;
          acc += c * binom(k, i) * binom(l, j) / (binom(m, i) * binom(n, j));
        }
      }
      p.b_[p.idx(k, l)] = acc;
    }
  }
  return p;
}

Rat BernsteinPatch::min_coeff() const {
  Rat mn = b_.front();
  for (const auto& v : b_)
    if (v < mn) mn = v;
  return mn;
}

Rat BernsteinPatch::max_coeff() const {
  Rat mx = b_.front();
  for (const auto& v : b_)
    if (v > mx) mx = v;
  return mx;
}

bool BernsteinPatch::all_nonpositive() const {
  for (const auto& v : b_)
    if (sign(v) > 0) return false;
  return true;
}

std::pair<int, int> BernsteinPatch::argmax() const {
  size_t best = 0;
  for (size_t i = 1; i < b_.size(); ++i)
    if (b_[i] > b_[best]) best = i;
  return {static_cast<int>(best) / (n_ + 1), static_cast<int>(best) % (n_ + 1)};
}

std::pair<BernsteinPatch, BernsteinPatch> BernsteinPatch::subdivide(Axis a) const {
  Rat half = make_rat(1, 2);
  if (a == Axis::X) {
    Rat mid = box_.x_lo + box_.width_x() * half;
    BernsteinPatch lo(Box(box_.x_lo, mid, box_.y_lo, box_.y_hi), m_, n_);
    BernsteinPatch hi(Box(mid, box_.x_hi, box_.y_lo, box_.y_hi), m_, n_);
    lo.b_.assign(b_.size(), Rat(0));
    hi.b_.assign(b_.size(), Rat(0));
    // de Casteljau along each column of fixed j.
    for (int j = 0; j <= n_; ++j) {
      std::vector<Rat> row(m_ + 1);
      for (int i = 0; i <= m_; ++i) row[i] = at(i, j);
      for (int step = 0; step <= m_; ++step) {
        lo.b_[lo.idx(step, j)] = row[0];
        hi.b_[hi.idx(m_ - step, j)] = row[m_ - step];
        for (int i = 0; i + step < m_; ++i) row[i] = (row[i] + row[i + 1]) * half;
      }
    }
    return {std::move(lo), std::move(hi)};
  }
  Rat mid = box_.y_lo + box_.width_y() * half;
  BernsteinPatch lo(Box(box_.x_lo, box_.x_hi, box_.y_lo, mid), m_, n_);
  BernsteinPatch hi(Box(box_.x_lo, box_.x_hi, mid, box_.y_hi), m_, n_);
  lo.b_.assign(b_.size(), Rat(0));
  hi.b_.assign(b_.size(), Rat(0));
  for (int i = 0; i <= m_; ++i) {
    std::vector<Rat> row(n_ + 1);
    for (int j = 0; j <= n_; ++j) row[j] = at(i, j);
    for (int step = 0; step <= n_; ++step) {
      lo.b_[lo.idx(i, step)] = row[0];
      hi.b_[hi.idx(i, n_ - step)] = row[n_ - step];
      for (int j = 0; j + step < n_; ++j) row[j] = (row[j] + row[j + 1]) * half;
    }
  }
  return {std::move(lo), std::move(hi)};
}

}  // namespace apc
