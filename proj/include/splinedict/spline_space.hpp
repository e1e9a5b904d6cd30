#pragma once

#include <splinedict/partition.hpp>

#include <vector>

namespace splinedict {

/// The space of splines of a given order over a uniform partition of [c, d]:
/// piecewise polynomials of degree order-1 with maximal smoothness at the
/// interior knots. Dimension = order + number of interior knots.
class SplineSpace {
 public:
  SplineSpace(int order, Partition partition);

  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] const Partition& partition() const noexcept { return partition_; }
  [[nodiscard]] double left() const noexcept { return partition_.left(); }
  [[nodiscard]] double right() const noexcept { return partition_.right(); }
  [[nodiscard]] double spacing() const noexcept { return partition_.spacing(); }
  [[nodiscard]] long dimension() const noexcept { return order_ + partition_.interior_count(); }

 private:
  int order_;
  Partition partition_;
};

enum class BasisKind { esep, epkb };

/// Knot sequence y_1 <= ... <= y_{2m+N} extending the partition of [c, d] by
/// order extra knots on each side: either the equally spaced continuation
/// past both ends (esep), or that continuation clamped into [c, d], which
/// piles order-fold knots onto the borders (epkb).
struct ExtendedPartition {
  BasisKind kind = BasisKind::esep;
  std::vector<double> knots;

  [[nodiscard]] static ExtendedPartition make(const SplineSpace& space, BasisKind kind);
};

enum class AtomVariant { inner, left_boundary, right_boundary };

/// One basis or dictionary function restricted to a domain [lo, hi]: either a
/// translate (1/b)B((x-k)/b) of the cardinal prototype of the given order, or
/// a B-spline over an explicit knot window (used when end knots pile up).
/// Order-1 translates are right-open on their support, except that the value
/// at the domain's right endpoint is taken as the left limit so the basis
/// reproduces constants up to and including that endpoint; window atoms apply
/// the same left-limit rule there.
class Atom {
 public:
  [[nodiscard]] static Atom translate(int order, double shift, double scale, double lo, double hi,
                                      AtomVariant variant);
  [[nodiscard]] static Atom window(int order, std::vector<double> knots, double lo, double hi,
                                   AtomVariant variant);

  [[nodiscard]] double value(double x) const;

  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] double shift() const noexcept { return shift_; }
  [[nodiscard]] double scale() const noexcept { return scale_; }
  [[nodiscard]] double domain_lo() const noexcept { return lo_; }
  [[nodiscard]] double domain_hi() const noexcept { return hi_; }
  [[nodiscard]] AtomVariant variant() const noexcept { return variant_; }
  [[nodiscard]] bool is_window() const noexcept { return !window_.empty(); }
  [[nodiscard]] const std::vector<double>& knots() const noexcept { return window_; }

  /// Support inside the domain: [shift, shift + order*scale] (or the window's
  /// hull) intersected with [lo, hi].
  [[nodiscard]] double support_lo() const noexcept;
  [[nodiscard]] double support_hi() const noexcept;

 private:
  Atom() = default;
  int order_ = 0;
  double shift_ = 0, scale_ = 0, lo_ = 0, hi_ = 0;
  AtomVariant variant_ = AtomVariant::inner;
  std::vector<double> window_;
};

/// Basis of translates with shifts in P_b(c - order*b, d); atoms whose
/// untruncated support sticks out of [c, d] are flagged boundary variants.
[[nodiscard]] std::vector<Atom> build_esep_basis(const SplineSpace& space);

/// Basis read off consecutive windows of the clamped extended partition;
/// windows with repeated border knots become knot-window atoms, interior
/// windows degenerate to the same translates as the esep basis.
[[nodiscard]] std::vector<Atom> build_epkb_basis(const SplineSpace& space);

[[nodiscard]] std::vector<Atom> basis_atoms(const SplineSpace& space, BasisKind kind);

}  // namespace splinedict
