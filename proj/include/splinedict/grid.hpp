#pragma once

#include <splinedict/spline_space.hpp>

#include <Eigen/Core>

namespace splinedict {

/// Uniform evaluation grid on [lo, hi] with composite-trapezoid quadrature
/// weights; every function-level inner product and norm in this library is a
/// weighted sum over such a grid.
class Grid {
 public:
  Grid(double lo, double hi, double step);

  /// The working grid paired with a dictionary: step = b'/q.
  [[nodiscard]] static Grid working(double c, double d, double b_prime, int q = 16);

  [[nodiscard]] double lo() const noexcept { return lo_; }
  [[nodiscard]] double hi() const noexcept { return hi_; }
  [[nodiscard]] double step() const noexcept { return step_; }
  [[nodiscard]] long size() const noexcept { return points_.size(); }
  [[nodiscard]] const Eigen::VectorXd& points() const noexcept { return points_; }
  [[nodiscard]] const Eigen::VectorXd& weights() const noexcept { return weights_; }

  [[nodiscard]] double inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
  [[nodiscard]] double norm(const Eigen::VectorXd& u) const;

 private:
  double lo_, hi_, step_;
  Eigen::VectorXd points_, weights_;
};

/// Samples of one atom on the grid (zero outside its support).
[[nodiscard]] Eigen::VectorXd sample_atom(const Atom& atom, const Grid& grid);

/// Column j holds the samples of atoms[j].
[[nodiscard]] Eigen::MatrixXd sample_atoms(const std::vector<Atom>& atoms, const Grid& grid);

}  // namespace splinedict
