#pragma once

#include <utility>
#include <vector>

#include "apc/bipoly.hpp"

namespace apc {

/// Axis-aligned rational box; the default is the unit square.
struct Box {
  Rat x_lo{0}, x_hi{1}, y_lo{0}, y_hi{1};

  Box() = default;
  Box(Rat xl, Rat xh, Rat yl, Rat yh);

  Rat width_x() const { return x_hi - x_lo; }
  Rat width_y() const { return y_hi - y_lo; }
  QInterval x_interval() const { return {x_lo, x_hi}; }
  QInterval y_interval() const { return {y_lo, y_hi}; }
  bool contains(const Rat& x, const Rat& y) const;
};

/// Tensor-product Bernstein coefficients of a BiPoly on a box.  The range of
/// the polynomial on the box is enclosed by [min, max] of the coefficients and
/// the four corner coefficients equal the corner values.
class BernsteinPatch {
 public:
  static BernsteinPatch from(const BiPoly& f, const Box& box);

  const Box& box() const { return box_; }
  int deg_x() const { return m_; }
  int deg_y() const { return n_; }
  const Rat& at(int i, int j) const { return b_[idx(i, j)]; }
  const std::vector<Rat>& raw() const { return b_; }

  Rat min_coeff() const;
  Rat max_coeff() const;
  bool all_nonpositive() const;
  /// Local (i, j) position of the largest coefficient.
  std::pair<int, int> argmax() const;

  /// de Casteljau subdivision at the midpoint of the chosen axis; children
  /// coefficient ranges are contained in the parent range.
  std::pair<BernsteinPatch, BernsteinPatch> subdivide(Axis a) const;

 private:
  BernsteinPatch(Box b, int m, int n) : box_(std::move(b)), m_(m), n_(n) {}
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * (n_ + 1) + j; }

  Box box_;
  int m_ = 0, n_ = 0;
  std::vector<Rat> b_;
};

}  // namespace apc
