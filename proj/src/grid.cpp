#include <splinedict/grid.hpp>

#include <splinedict/partition.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace splinedict {

Grid::Grid(double lo, double hi, double step) : lo_(lo), hi_(hi), step_(step) {
  const long cells = interval_cells(lo, hi, step);
  points_.resize(cells + 1);
  for (long i = 0; i <= cells; ++i)
    points_[i] = i == cells ? hi : lo + static_cast<double>(i) * step;
  weights_ = Eigen::VectorXd::Constant(cells + 1, step);
  weights_[0] *= 0.5;
  weights_[cells] *= 0.5;
}

Grid Grid::working(double c, double d, double b_prime, int q) {
  if (q < 1) throw std::invalid_argument("incompatible-spacing: grid refinement q must be >= 1");
  return Grid(c, d, b_prime / static_cast<double>(q));
}

double Grid::inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
  if (u.size() != size() || v.size() != size())
    throw std::invalid_argument("grid-mismatch: vector length differs from grid size");
  return (u.array() * weights_.array() * v.array()).sum();
}

double Grid::norm(const Eigen::VectorXd& u) const { return std::sqrt(inner(u, u)); }

Eigen::VectorXd sample_atom(const Atom& atom, const Grid& grid) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(grid.size());
  const double lo = atom.support_lo(), hi = atom.support_hi();
  const long i0 = std::max<long>(0, static_cast<long>(std::ceil((lo - grid.lo()) / grid.step() - 1e-9)));
  const long i1 = std::min<long>(grid.size() - 1,
                                 static_cast<long>(std::floor((hi - grid.lo()) / grid.step() + 1e-9)));
  for (long i = i0; i <= i1; ++i) v[i] = atom.value(grid.points()[i]);
  return v;
}

Eigen::MatrixXd sample_atoms(const std::vector<Atom>& atoms, const Grid& grid) {
  Eigen::MatrixXd out(grid.size(), static_cast<long>(atoms.size()));
  for (long j = 0; j < out.cols(); ++j) out.col(j) = sample_atom(atoms[static_cast<std::size_t>(j)], grid);
  return out;
}

}  // namespace splinedict
