#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include <splinedict/dictionary.hpp>
#include <splinedict/signals.hpp>

namespace splinedict {

struct StopRule {
  int max_atoms = -1;            ///< negative: no atom-count cap
  double target_relerr = 1e-3;   ///< stop once the relative error reaches this
};

/// State of a greedy pursuit: the selected atom indices, an orthonormal basis
/// of their span (with respect to the quadrature inner product), least-squares
/// coefficients over the selected atoms, and the residual.
struct PursuitState {
  std::vector<Eigen::Index> selected;
  Eigen::MatrixXd ortho;         ///< columns orthonormal w.r.t. the weights
  Eigen::VectorXd coefficients;  ///< over the selected atoms, in `selected` order
  Eigen::VectorXd residual;
  double signal_norm = 0;
  double residual_norm = 0;

  [[nodiscard]] int size() const { return static_cast<int>(selected.size()); }
  [[nodiscard]] double relerr() const {
    return signal_norm == 0 ? 0.0 : residual_norm / signal_norm;
  }
};

/// Thrown when pursuit cannot reach the target error because every remaining
/// candidate is numerically inside the selected span. Carries the partial
/// state so callers can still write diagnostics.
class StagnationError : public std::runtime_error {
 public:
  StagnationError(std::string what, PursuitState state)
      : std::runtime_error(std::move(what)), partial_state(std::move(state)) {}
  PursuitState partial_state;
};

/// Forward optimized orthogonal matching pursuit. Each step selects the atom
/// maximizing |<r, phi>| / ||phi - P phi|| (P = projection onto the selected
/// span, all in the weighted inner product), orthogonalizes it against the
/// current basis with one reorthogonalization pass, and updates the residual.
/// Atoms whose out-of-span component drops below 1e-10 of their norm are
/// excluded. Final coefficients come from a dense least-squares solve over the
/// selected columns.
[[nodiscard]] PursuitState oomp_select(const Eigen::MatrixXd& atoms,
                                       const Eigen::VectorXd& weights,
                                       const Eigen::VectorXd& f, const StopRule& stop);

/// Convenience overload: samples the dictionary atoms on the signal's grid
/// (which must cover the dictionary interval and subdivide its fine shift
/// spacing) and runs the matrix form.
[[nodiscard]] PursuitState oomp_select(const Dictionary& dict, const SampledSignal& signal,
                                       const StopRule& stop);

/// Rebuilds a pursuit state for an explicit atom subset: orthonormal basis via
/// QR of the weighted columns, least-squares coefficients, residual.
[[nodiscard]] PursuitState state_from_subset(const Eigen::MatrixXd& atoms,
                                             const Eigen::VectorXd& weights,
                                             const Eigen::VectorXd& f,
                                             const std::vector<Eigen::Index>& subset);

/// Backward pruning: repeatedly removes the atom whose removal increases the
/// residual sum of squares least (delta_j = c_j^2 / (G^-1)_jj for Gram matrix
/// G of the selected atoms), while the relative error stays within the target.
[[nodiscard]] PursuitState backward_prune(const PursuitState& state,
                                          const Eigen::MatrixXd& atoms,
                                          const Eigen::VectorXd& weights,
                                          const Eigen::VectorXd& f, double target_relerr);

struct ApproxResult {
  PursuitState state;
  Eigen::VectorXd reconstruction;
  int atoms_used = 0;
  double relative_error = 0;
};

/// Forward pursuit followed by backward pruning against the same target.
[[nodiscard]] ApproxResult approximate(const Dictionary& dict, const SampledSignal& signal,
                                       const StopRule& stop);

}  // namespace splinedict
