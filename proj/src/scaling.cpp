#include <splinedict/scaling.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <utility>

namespace splinedict {

namespace {

long index_on_grid(const std::vector<double>& grid_values, double step, double value,
                   const char* what) {
  const double idx = std::round((value - grid_values.front()) / step);
  const long i = static_cast<long>(idx);
  if (i < 0 || i >= static_cast<long>(grid_values.size()) ||
      std::abs(value - grid_values[static_cast<std::size_t>(i)]) > 1e-9 * step)
    throw std::invalid_argument(std::string("invalid-shift: ") + std::to_string(value) +
                                " is not on the " + what + " shift grid");
  return i;
}

}  // namespace

ScalingSystem::ScalingSystem(const Dictionary& dict, std::vector<ScalingClass> classes,
                             std::vector<long> first_fine, std::vector<Eigen::VectorXd> coeffs)
    : order_(dict.order()),
      b_(dict.b()),
      b_prime_(dict.b_prime()),
      c_(dict.left()),
      d_(dict.right()),
      refinement_(dict.refinement()),
      dict_shifts_(dict.shifts()),
      fine_shifts_(equidistant_points(c_ - order_ * b_prime_, d_, b_prime_, Closure::open)),
      classes_(std::move(classes)),
      first_fine_(std::move(first_fine)),
      coeffs_(std::move(coeffs)) {
  if (classes_.size() != dict_shifts_.size() || first_fine_.size() != dict_shifts_.size() ||
      coeffs_.size() != dict_shifts_.size())
    throw std::invalid_argument("grid-mismatch: scaling table size differs from the dictionary");
}

double ScalingSystem::coeff(long dict_idx, long fine_idx) const {
  const long f0 = first_fine(dict_idx);
  const auto& blk = coeff_block(dict_idx);
  if (fine_idx < f0 || fine_idx >= f0 + blk.size()) return 0.0;
  return blk[fine_idx - f0];
}

double ScalingSystem::pivot(long dict_idx) const {
  const auto& blk = coeff_block(dict_idx);
  return klass(dict_idx) == ScalingClass::left_boundary ? blk[blk.size() - 1] : blk[0];
}

long ScalingSystem::fine_index_of(double shift) const {
  return index_on_grid(fine_shifts_, b_prime_, shift, "fine basis");
}

long ScalingSystem::dict_index_of(double shift) const {
  return index_on_grid(dict_shifts_, b_prime_, shift, "dictionary");
}

ScalingSystem compute_scaling_system(const Dictionary& dict, const Grid& grid) {
  if (dict.kind() != BasisKind::esep)
    throw std::invalid_argument("incompatible-refinement: scaling equations hold for translate dictionaries");
  const int m = dict.order();
  const double b = dict.b(), bp = dict.b_prime(), c = dict.left(), d = dict.right();
  if (std::abs(grid.lo() - c) > 1e-9 * bp || std::abs(grid.hi() - d) > 1e-9 * bp)
    throw std::invalid_argument("grid-mismatch: working grid must cover exactly [c,d]");
  (void)interval_cells(0.0, bp, grid.step());  // grid step must divide b'

  const SplineSpace fine = dict.fine_space();
  const std::vector<Atom> fine_atoms = build_esep_basis(fine);
  const Eigen::MatrixXd fine_cols = sample_atoms(fine_atoms, grid);
  const Eigen::VectorXd sw = grid.weights().cwiseSqrt();
  const long F = fine_cols.cols();

  // fine index of a fine shift value, by position in the b'-grid
  const double fine_first = c - m * bp + bp;
  const auto fine_index = [&](double shift) {
    return static_cast<long>(std::llround((shift - fine_first) / bp));
  };

  std::vector<ScalingClass> classes;
  std::vector<long> first_fine;
  std::vector<Eigen::VectorXd> coeffs;
  classes.reserve(dict.atoms().size());
  for (long j = 0; j < dict.size(); ++j) {
    const double k = dict.shifts()[static_cast<std::size_t>(j)];
    ScalingClass cls = ScalingClass::inner;
    if (k < c - 0.5 * bp)
      cls = ScalingClass::left_boundary;
    else if (k > d - m * b + 0.5 * bp)
      cls = ScalingClass::right_boundary;

    long f0 = 0, f1 = 0;  // inclusive fine-index window
    switch (cls) {
      case ScalingClass::left_boundary:
        f0 = 0;
        f1 = fine_index(k + m * (b - bp));
        break;
      case ScalingClass::inner:
        f0 = fine_index(k);
        f1 = f0 + m * (dict.refinement() - 1);
        break;
      case ScalingClass::right_boundary:
        f0 = fine_index(k);
        f1 = F - 1;
        break;
    }

    const Eigen::VectorXd target = sample_atom(dict.atoms()[static_cast<std::size_t>(j)], grid);
    const long cols = f1 - f0 + 1;
    const Eigen::MatrixXd A = sw.asDiagonal() * fine_cols.middleCols(f0, cols);
    const Eigen::VectorXd h = A.colPivHouseholderQr().solve(sw.cwiseProduct(target));

    const double target_norm = grid.norm(target);
    const double residual = grid.norm(target - fine_cols.middleCols(f0, cols) * h);
    if (!(residual <= 1e-8 * target_norm))
      throw std::runtime_error("scaling-residual: atom at shift " + std::to_string(k) +
                               " not reproduced by its fine window (relative residual " +
                               std::to_string(residual / target_norm) + ")");
    const double piv = cls == ScalingClass::left_boundary ? h[cols - 1] : h[0];
    if (std::abs(piv) < 1e-10)
      throw SingularPivotError("singular-pivot: coefficient " + std::to_string(piv) +
                               " at shift " + std::to_string(k));

    classes.push_back(cls);
    first_fine.push_back(f0);
    coeffs.push_back(h);
  }
  return ScalingSystem(dict, std::move(classes), std::move(first_fine), std::move(coeffs));
}

Eigen::VectorXd eliminate_fine_atom(const ScalingSystem& scal, double fine_shift) {
  const int m = scal.order();
  const double b = scal.b(), bp = scal.b_prime(), c = scal.left();
  const long F = scal.fine_size();
  const long l = scal.fine_index_of(fine_shift);
  const long first_interior = m - 1;  // fine index of shift c

  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(scal.dict_size());
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(F);
  beta[l] = 1.0;

  if (l >= first_interior) {
    // fine shifts in [c, d): substitute left to right; each equation's pivot
    // sits at its own shift, the last atom's window is the single shift d-b'.
    for (long j = l; j < F; ++j) {
      if (beta[j] == 0.0) continue;
      const double t = beta[j];
      beta[j] = 0.0;
      const long di = scal.dict_index_of(scal.fine_shifts()[static_cast<std::size_t>(j)]);
      const auto& blk = scal.coeff_block(di);
      const long f0 = scal.first_fine(di);
      const double piv = blk[0];
      if (std::abs(piv) < 1e-10)
        throw SingularPivotError("singular-pivot: elimination cannot divide by " +
                                 std::to_string(piv));
      alpha[di] += t / piv;
      for (long r = 1; r < blk.size(); ++r) beta[f0 + r] -= t * blk[r] / piv;
    }
  } else {
    // fine shifts in (c - m b', c): substitute right to left through the
    // left-boundary equations; the equation for dictionary shift
    // k = n - m(b - b') has its pivot at top index n.
    for (long j = l; j >= 0; --j) {
      if (beta[j] == 0.0) continue;
      const double t = beta[j];
      beta[j] = 0.0;
      const double n_shift = scal.fine_shifts()[static_cast<std::size_t>(j)];
      const long di = scal.dict_index_of(n_shift - m * (b - bp));
      const auto& blk = scal.coeff_block(di);
      const long f0 = scal.first_fine(di);
      if (f0 + blk.size() - 1 != j)
        throw std::logic_error("elimination: left window top does not match the eliminated shift");
      const double piv = blk[blk.size() - 1];
      if (std::abs(piv) < 1e-10)
        throw SingularPivotError("singular-pivot: elimination cannot divide by " +
                                 std::to_string(piv));
      alpha[di] += t / piv;
      for (long r = 0; r + 1 < blk.size(); ++r) beta[f0 + r] -= t * blk[r] / piv;
    }
  }
  if (beta.cwiseAbs().maxCoeff() != 0.0)
    throw std::logic_error("elimination: fine terms left after back-substitution");
  return alpha;
}

}  // namespace splinedict
