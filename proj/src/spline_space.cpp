#include <splinedict/spline_space.hpp>

#include <splinedict/bspline.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace splinedict {

SplineSpace::SplineSpace(int order, Partition partition)
    : order_(order), partition_(partition) {
  if (order < 1) throw std::invalid_argument("invalid-order: spline order must be >= 1");
  if (partition.closure() != Closure::closed)
    throw std::invalid_argument("incompatible-spacing: a spline space needs the closed partition of [c,d]");
  const double len = partition.right() - partition.left();
  if (len < static_cast<double>(order) * partition.spacing() * (1.0 - 1e-12))
    throw std::invalid_argument(
        "incompatible-spacing: interval shorter than one full prototype support (d-c < order*b)");
}

ExtendedPartition ExtendedPartition::make(const SplineSpace& space, BasisKind kind) {
  const int m = space.order();
  const double b = space.spacing(), c = space.left(), d = space.right();
  ExtendedPartition ext;
  ext.kind = kind;
  ext.knots = equidistant_points(c - m * b, d + m * b, b, Closure::open);
  if (kind == BasisKind::epkb)
    for (double& y : ext.knots) y = std::clamp(y, c, d);
  return ext;
}

Atom Atom::translate(int order, double shift, double scale, double lo, double hi,
                     AtomVariant variant) {
  if (order < 1) throw std::invalid_argument("invalid-order: B-spline order must be >= 1");
  if (!(scale > 0.0)) throw std::invalid_argument("incompatible-spacing: atom scale must be positive");
  Atom a;
  a.order_ = order;
  a.shift_ = shift;
  a.scale_ = scale;
  a.lo_ = lo;
  a.hi_ = hi;
  a.variant_ = variant;
  return a;
}

Atom Atom::window(int order, std::vector<double> knots, double lo, double hi,
                  AtomVariant variant) {
  if (order < 1) throw std::invalid_argument("invalid-order: B-spline order must be >= 1");
  if (static_cast<int>(knots.size()) != order + 1)
    throw std::invalid_argument("degenerate-knot: window must hold order+1 knots");
  Atom a;
  a.order_ = order;
  a.shift_ = knots.front();
  a.scale_ = (knots.back() - knots.front()) / order;
  a.lo_ = lo;
  a.hi_ = hi;
  a.variant_ = variant;
  a.window_ = std::move(knots);
  return a;
}

double Atom::value(double x) const {
  if (x < lo_ || x > hi_) return 0.0;
  if (!window_.empty())
    return bspline_from_knots<double>(window_, x, /*left_limit=*/x == hi_);
  double u = (x - shift_) / scale_;
  // Shifts accumulated from a non-dyadic spacing can sit one ulp off the exact
  // cell edge; snap so that edge ownership stays consistent across neighbors
  // (order 1 is discontinuous there, and a stray ulp would leave grid points
  // covered by no atom or by two).
  const double nearest = std::round(u);
  if (std::abs(u - nearest) < 1e-9) u = nearest;
  if (order_ == 1) {
    if (u < 0.0 || u > 1.0) return 0.0;
    if (u < 1.0) return 1.0 / scale_;
    return x == hi_ ? 1.0 / scale_ : 0.0;  // support ends exactly at the domain border
  }
  return cardinal_bspline(order_, u) / scale_;
}

double Atom::support_lo() const noexcept {
  const double a = window_.empty() ? shift_ : window_.front();
  return std::max(a, lo_);
}

double Atom::support_hi() const noexcept {
  const double b = window_.empty() ? shift_ + static_cast<double>(order_) * scale_ : window_.back();
  return std::min(b, hi_);
}

std::vector<Atom> build_esep_basis(const SplineSpace& space) {
  const int m = space.order();
  const double b = space.spacing(), c = space.left(), d = space.right();
  std::vector<Atom> atoms;
  for (double k : equidistant_points(c - m * b, d, b, Closure::open)) {
    AtomVariant v = AtomVariant::inner;
    if (k < c - 0.5 * b)
      v = AtomVariant::left_boundary;
    else if (k > d - m * b + 0.5 * b)
      v = AtomVariant::right_boundary;
    atoms.push_back(Atom::translate(m, k, b, c, d, v));
  }
  return atoms;
}

std::vector<Atom> build_epkb_basis(const SplineSpace& space) {
  const auto ext = ExtendedPartition::make(space, BasisKind::epkb);
  const int m = space.order();
  const double b = space.spacing(), c = space.left(), d = space.right();
  const long count = static_cast<long>(ext.knots.size()) - m;  // order + interior knots
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    std::vector<double> w(ext.knots.begin() + i, ext.knots.begin() + i + m + 1);
    const bool rep_front = w[1] == w[0];
    const bool rep_back = w[static_cast<std::size_t>(m)] == w[static_cast<std::size_t>(m) - 1];
    if (m >= 2 && rep_front)
      atoms.push_back(Atom::window(m, std::move(w), c, d, AtomVariant::left_boundary));
    else if (m >= 2 && rep_back)
      atoms.push_back(Atom::window(m, std::move(w), c, d, AtomVariant::right_boundary));
    else
      atoms.push_back(Atom::translate(m, w.front(), b, c, d, AtomVariant::inner));
  }
  return atoms;
}

std::vector<Atom> basis_atoms(const SplineSpace& space, BasisKind kind) {
  return kind == BasisKind::esep ? build_esep_basis(space) : build_epkb_basis(space);
}

}  // namespace splinedict
