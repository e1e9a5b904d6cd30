#include <splinedict/partition.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace splinedict {

long interval_cells(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("incompatible-spacing: step must be positive");
  if (!(hi > lo)) throw std::invalid_argument("incompatible-spacing: interval is empty");
  const double ratio = (hi - lo) / step;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-12 * std::max(1.0, std::abs(ratio))) {
    throw std::invalid_argument("incompatible-spacing: (hi-lo)/step = " + std::to_string(ratio) +
                                " is not a positive integer");
  }
  return static_cast<long>(rounded);
}

std::vector<double> equidistant_points(double lo, double hi, double step, Closure closure) {
  const long cells = interval_cells(lo, hi, step);
  const bool keep_lo = closure == Closure::closed || closure == Closure::right_open;
  const bool keep_hi = closure == Closure::closed || closure == Closure::left_open;
  const long first = keep_lo ? 0 : 1;
  const long last = keep_hi ? cells : cells - 1;
  std::vector<double> pts;
  if (last >= first) pts.reserve(static_cast<std::size_t>(last - first + 1));
  for (long i = first; i <= last; ++i)
    pts.push_back(i == cells ? hi : lo + static_cast<double>(i) * step);
  return pts;
}

Partition::Partition(double c, double d, double b, Closure closure)
    : c_(c), d_(d), b_(b), closure_(closure), cells_(interval_cells(c, d, b)) {}

long Partition::size() const noexcept {
  const bool keep_lo = closure_ == Closure::closed || closure_ == Closure::right_open;
  const bool keep_hi = closure_ == Closure::closed || closure_ == Closure::left_open;
  return cells_ + 1 - (keep_lo ? 0 : 1) - (keep_hi ? 0 : 1);
}

std::vector<double> Partition::knots() const { return equidistant_points(c_, d_, b_, closure_); }

std::vector<double> Partition::uplus(double r) const {
  if (closure_ != Closure::closed)
    throw std::invalid_argument("invalid-shift: uplus is defined on closed partitions");
  if (!(r > 0.0) || !(r < b_))
    throw std::invalid_argument("invalid-shift: uplus offset must satisfy 0 < r < spacing");
  const std::vector<double> base = knots();
  std::vector<double> out;
  out.reserve(2 * base.size() - 1);
  for (std::size_t i = 0; i + 1 < base.size(); ++i) {
    out.push_back(base[i]);
    out.push_back(base[i] + r);
  }
  out.push_back(base.back());
  return out;
}

}  // namespace splinedict
