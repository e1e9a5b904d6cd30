#pragma once

#include <vector>

namespace splinedict {

enum class Closure { closed, open, left_open, right_open };

/// Number of cells (hi-lo)/step, required to be a positive integer to a
/// relative tolerance of 1e-12; throws "incompatible-spacing" otherwise.
[[nodiscard]] long interval_cells(double lo, double hi, double step);

/// Equidistant points lo + i*step over [lo, hi], with the endpoints kept or
/// dropped according to the closure variant (left_open drops lo, right_open
/// drops hi, open drops both). The final point is pinned to hi exactly.
[[nodiscard]] std::vector<double> equidistant_points(double lo, double hi, double step,
                                                     Closure closure);

/// Uniform partition of [c, d] with spacing b: the point set
/// {c, c+b, ..., d} minus whatever endpoints the closure variant excludes.
class Partition {
 public:
  Partition(double c, double d, double b, Closure closure = Closure::closed);

  [[nodiscard]] double left() const noexcept { return c_; }
  [[nodiscard]] double right() const noexcept { return d_; }
  [[nodiscard]] double spacing() const noexcept { return b_; }
  [[nodiscard]] Closure closure() const noexcept { return closure_; }
  [[nodiscard]] long cells() const noexcept { return cells_; }
  [[nodiscard]] long interior_count() const noexcept { return cells_ - 1; }
  [[nodiscard]] long size() const noexcept;
  [[nodiscard]] std::vector<double> knots() const;

  /// Interleaves a copy of every knot except the last shifted by r,
  /// 0 < r < b: {x_0, x_0+r, x_1, x_1+r, ..., x_N+r, x_{N+1}}, ascending.
  /// Defined on closed partitions; throws "invalid-shift" otherwise.
  [[nodiscard]] std::vector<double> uplus(double r) const;

 private:
  double c_, d_, b_;
  Closure closure_;
  long cells_;
};

}  // namespace splinedict
