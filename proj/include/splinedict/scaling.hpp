#pragma once

#include <splinedict/dictionary.hpp>
#include <splinedict/grid.hpp>

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

namespace splinedict {

/// A scaling-system pivot fell below the safe threshold; the elimination
/// recursion would divide by it. Indicates a grid or indexing bug.
class SingularPivotError : public std::runtime_error {
 public:
  explicit SingularPivotError(const std::string& what) : std::runtime_error(what) {}
};

enum class ScalingClass { left_boundary, inner, right_boundary };

/// For every dictionary atom phi_k, its coefficients h_{n,k} over the fine
/// translate basis {phi'_n} of S_m(P_{b'}[c,d]), n running over the
/// class-dependent fine-shift window
///   left  (k < c):          (c - m b', k + m(b - b')]
///   inner (c <= k <= d-mb): [k, k + m(b - b')]
///   right (k > d - mb):     [k, d)
/// so that phi_k = sum_n h_{n,k} phi'_n exactly. Fine shifts are addressed by
/// their index in the fine shift grid P_{b'}(c - m b', d).
class ScalingSystem {
 public:
  ScalingSystem(const Dictionary& dict, std::vector<ScalingClass> classes,
                std::vector<long> first_fine, std::vector<Eigen::VectorXd> coeffs);

  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] double b_prime() const noexcept { return b_prime_; }
  [[nodiscard]] double left() const noexcept { return c_; }
  [[nodiscard]] double right() const noexcept { return d_; }
  [[nodiscard]] long refinement() const noexcept { return refinement_; }
  [[nodiscard]] long dict_size() const noexcept { return static_cast<long>(dict_shifts_.size()); }
  [[nodiscard]] long fine_size() const noexcept { return static_cast<long>(fine_shifts_.size()); }
  [[nodiscard]] const std::vector<double>& dict_shifts() const noexcept { return dict_shifts_; }
  [[nodiscard]] const std::vector<double>& fine_shifts() const noexcept { return fine_shifts_; }

  [[nodiscard]] ScalingClass klass(long dict_idx) const { return classes_.at(static_cast<std::size_t>(dict_idx)); }
  [[nodiscard]] long first_fine(long dict_idx) const { return first_fine_.at(static_cast<std::size_t>(dict_idx)); }
  [[nodiscard]] const Eigen::VectorXd& coeff_block(long dict_idx) const {
    return coeffs_.at(static_cast<std::size_t>(dict_idx));
  }

  /// h_{n,k} with n given as a fine-grid index; zero outside the stored window.
  [[nodiscard]] double coeff(long dict_idx, long fine_idx) const;

  /// The coefficient the elimination recursion divides by: h_{k,k} for inner
  /// and right atoms, the top-index coefficient h_{k+m(b-b'),k} for left ones.
  [[nodiscard]] double pivot(long dict_idx) const;

  [[nodiscard]] long fine_index_of(double shift) const;
  [[nodiscard]] long dict_index_of(double shift) const;

 private:
  int order_ = 0;
  double b_ = 0, b_prime_ = 0, c_ = 0, d_ = 0;
  long refinement_ = 1;
  std::vector<double> dict_shifts_, fine_shifts_;
  std::vector<ScalingClass> classes_;
  std::vector<long> first_fine_;
  std::vector<Eigen::VectorXd> coeffs_;
};

/// Computes the coefficient table by weighted least squares of each atom
/// against the fine basis columns restricted to its class window, on the
/// given working grid. Validates that every atom is reproduced to a relative
/// grid residual below 1e-8 and that no pivot is smaller than 1e-10.
[[nodiscard]] ScalingSystem compute_scaling_system(const Dictionary& dict, const Grid& grid);

/// Rebuilds one fine basis atom as a finite combination of dictionary atoms
/// by back-substitution through the scaling equations: fine shifts in [c, d)
/// are eliminated left to right down to the terminal atom at d - b'; fine
/// shifts in (c - m b', c) are eliminated right to left through the
/// left-boundary equations. Returns the coefficient vector over the
/// dictionary's atoms.
[[nodiscard]] Eigen::VectorXd eliminate_fine_atom(const ScalingSystem& scal, double fine_shift);

}  // namespace splinedict
