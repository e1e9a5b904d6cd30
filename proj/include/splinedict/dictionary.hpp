#pragma once

#include <splinedict/spline_space.hpp>

#include <vector>

namespace splinedict {

/// Translates of the wide prototype (support order*b) placed on the finer
/// shift grid P_{b'}(c - order*b, d) and restricted to [c, d]. With b' == b
/// this degenerates to the basis of S_order(P_b[c,d]); with b' < b it is a
/// redundant system spanning the finer space S_order(P_{b'}[c,d]).
class Dictionary {
 public:
  [[nodiscard]] static Dictionary build(int order, const Partition& coarse, double b_prime,
                                        BasisKind kind = BasisKind::esep);

  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] double b_prime() const noexcept { return b_prime_; }
  [[nodiscard]] double left() const noexcept { return c_; }
  [[nodiscard]] double right() const noexcept { return d_; }
  [[nodiscard]] BasisKind kind() const noexcept { return kind_; }
  [[nodiscard]] long refinement() const noexcept { return refinement_; }  // b / b'
  [[nodiscard]] const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  [[nodiscard]] const std::vector<double>& shifts() const noexcept { return shifts_; }
  [[nodiscard]] long size() const noexcept { return static_cast<long>(atoms_.size()); }

  /// Dimension of the fine space the dictionary spans: order + (d-c)/b' - 1.
  [[nodiscard]] long fine_dimension() const noexcept;
  [[nodiscard]] SplineSpace fine_space() const;
  [[nodiscard]] SplineSpace coarse_space() const;

  /// Index of the atom with the given shift; throws "invalid-shift" when the
  /// value is not on the shift grid.
  [[nodiscard]] long index_of_shift(double shift) const;

 private:
  Dictionary() = default;
  int order_ = 0;
  double b_ = 0, b_prime_ = 0, c_ = 0, d_ = 0;
  long refinement_ = 1;
  BasisKind kind_ = BasisKind::esep;
  std::vector<Atom> atoms_;
  std::vector<double> shifts_;
};

struct ShiftFamily {
  double offset = 0;                // multiple of b' added to the coarse grid
  std::vector<long> atom_indices;   // indices into Dictionary::atoms()
};

/// Splits the dictionary's shift set into the coarse-spacing family plus the
/// b'-shifted copies: family i holds the shifts of P_b[c - order*b, d) + i*b'
/// that fall inside the open interval (c - order*b, d), i = 0..b/b'-1. The
/// families are pairwise disjoint and exactly tile the shift set.
[[nodiscard]] std::vector<ShiftFamily> union_decomposition(const Dictionary& dict);

}  // namespace splinedict
