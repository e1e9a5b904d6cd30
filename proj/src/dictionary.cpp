#include <splinedict/dictionary.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace splinedict {

Dictionary Dictionary::build(int order, const Partition& coarse, double b_prime, BasisKind kind) {
  SplineSpace space(order, coarse);  // validates order, closure, d-c >= order*b
  if (!(b_prime > 0.0))
    throw std::invalid_argument("incompatible-refinement: b' must be positive");
  const double ratio = coarse.spacing() / b_prime;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-12 * std::max(1.0, std::abs(ratio)))
    throw std::invalid_argument("incompatible-refinement: b/b' = " + std::to_string(ratio) +
                                " is not a positive integer");

  Dictionary dict;
  dict.order_ = order;
  dict.b_ = coarse.spacing();
  dict.b_prime_ = b_prime;
  dict.c_ = coarse.left();
  dict.d_ = coarse.right();
  dict.refinement_ = static_cast<long>(rounded);
  dict.kind_ = kind;

  const int m = order;
  const double b = dict.b_, c = dict.c_, d = dict.d_;
  dict.shifts_ = equidistant_points(c - m * b, d, b_prime, Closure::open);
  dict.atoms_.reserve(dict.shifts_.size());
  for (double k : dict.shifts_) {
    AtomVariant v = AtomVariant::inner;
    if (k < c - 0.5 * b_prime)
      v = AtomVariant::left_boundary;
    else if (k > d - m * b + 0.5 * b_prime)
      v = AtomVariant::right_boundary;
    if (kind == BasisKind::esep || v == AtomVariant::inner) {
      dict.atoms_.push_back(Atom::translate(m, k, b, c, d, v));
    } else {
      // epkb flavour: clamp the translate's knot window into [c, d]
      std::vector<double> w(static_cast<std::size_t>(m) + 1);
      for (int j = 0; j <= m; ++j)
        w[static_cast<std::size_t>(j)] = std::clamp(k + j * b, c, d);
      dict.atoms_.push_back(Atom::window(m, std::move(w), c, d, v));
    }
  }
  return dict;
}

long Dictionary::fine_dimension() const noexcept {
  return order_ + static_cast<long>(std::lround((d_ - c_) / b_prime_)) - 1;
}

SplineSpace Dictionary::fine_space() const {
  return SplineSpace(order_, Partition(c_, d_, b_prime_));
}

SplineSpace Dictionary::coarse_space() const {
  return SplineSpace(order_, Partition(c_, d_, b_));
}

long Dictionary::index_of_shift(double shift) const {
  const double first = shifts_.front();
  const double idx = std::round((shift - first) / b_prime_);
  const long i = static_cast<long>(idx);
  if (i < 0 || i >= size() || std::abs(shift - shifts_[static_cast<std::size_t>(i)]) > 1e-9 * b_prime_)
    throw std::invalid_argument("invalid-shift: " + std::to_string(shift) +
                                " is not on the dictionary shift grid");
  return i;
}

std::vector<ShiftFamily> union_decomposition(const Dictionary& dict) {
  const int m = dict.order();
  const double b = dict.b(), bp = dict.b_prime();
  const double lo = dict.left() - m * b;  // open end of the shift grid
  const double hi = dict.right();
  const long p = dict.refinement() - 1;

  std::vector<ShiftFamily> families;
  std::vector<char> covered(static_cast<std::size_t>(dict.size()), 0);
  for (long i = 0; i <= p; ++i) {
    ShiftFamily fam;
    fam.offset = static_cast<double>(i) * bp;
    for (double base : equidistant_points(lo, hi, b, Closure::right_open)) {
      const double k = base + fam.offset;
      if (k > lo + 0.5 * bp && k < hi - 0.5 * bp) {
        const long idx = dict.index_of_shift(k);
        if (covered[static_cast<std::size_t>(idx)]++)
          throw std::logic_error("union decomposition: families overlap");
        fam.atom_indices.push_back(idx);
      }
    }
    families.push_back(std::move(fam));
  }
  if (std::count(covered.begin(), covered.end(), char(1)) != dict.size())
    throw std::logic_error("union decomposition: families do not cover the shift set");
  return families;
}

}  // namespace splinedict
