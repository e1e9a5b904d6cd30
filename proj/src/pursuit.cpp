#include <splinedict/pursuit.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include <Eigen/Dense>

#include <splinedict/grid.hpp>
#include <splinedict/partition.hpp>

namespace splinedict {

namespace {

constexpr double kMinTarget = 1e-14;      // floor under requested relative errors
constexpr double kExclusionTol = 1e-10;   // relative out-of-span threshold
constexpr double kRecomputeTol = 1e-5;    // below this, re-measure the component exactly
constexpr double kTieSlack = 1e-12;       // ties resolve to the lowest index
constexpr double kPruneSlack = 1e-12;

double weighted_norm(const Eigen::VectorXd& u, const Eigen::VectorXd& w) {
  return std::sqrt(u.dot(w.cwiseProduct(u)));
}

// Least-squares coefficients and residual over the already-selected columns.
void finalize(PursuitState& st, const Eigen::MatrixXd& atoms, const Eigen::VectorXd& weights,
              const Eigen::VectorXd& f) {
  const auto s = static_cast<Eigen::Index>(st.selected.size());
  if (s == 0) {
    st.coefficients.resize(0);
    st.residual = f;
    st.residual_norm = st.signal_norm;
    return;
  }
  const Eigen::VectorXd sqw = weights.cwiseSqrt();
  Eigen::MatrixXd ws(atoms.rows(), s);
  for (Eigen::Index j = 0; j < s; ++j)
    ws.col(j) = atoms.col(st.selected[static_cast<std::size_t>(j)]).cwiseProduct(sqw);
  st.coefficients = ws.householderQr().solve(f.cwiseProduct(sqw));
  Eigen::VectorXd approx = Eigen::VectorXd::Zero(atoms.rows());
  for (Eigen::Index j = 0; j < s; ++j)
    approx += st.coefficients[j] * atoms.col(st.selected[static_cast<std::size_t>(j)]);
  st.residual = f - approx;
  st.residual_norm = weighted_norm(st.residual, weights);
}

void check_signal_grid(const Dictionary& dict, const SampledSignal& signal) {
  if (std::abs(signal.lo - dict.left()) > 1e-9 || std::abs(signal.hi - dict.right()) > 1e-9)
    throw std::invalid_argument("pursuit: signal interval does not match the dictionary");
  (void)interval_cells(0.0, dict.b_prime(), signal.step);  // step must divide the fine spacing
}

}  // namespace

PursuitState oomp_select(const Eigen::MatrixXd& atoms, const Eigen::VectorXd& weights,
                         const Eigen::VectorXd& f, const StopRule& stop) {
  if (atoms.rows() != weights.size() || atoms.rows() != f.size())
    throw std::invalid_argument("oomp_select: grid-mismatch");
  const Eigen::Index n = atoms.rows();
  const Eigen::Index K = atoms.cols();
  if (K == 0) throw std::invalid_argument("oomp_select: empty dictionary");

  const double target = std::max(stop.target_relerr, kMinTarget);
  const int hard_cap = static_cast<int>(std::min(n, K));
  const int cap = stop.max_atoms < 0 ? hard_cap : std::min(stop.max_atoms, hard_cap);

  PursuitState st;
  st.signal_norm = weighted_norm(f, weights);
  st.residual = f;
  st.residual_norm = st.signal_norm;
  st.ortho.resize(n, cap);

  // Weighted squared norms, and accumulated squared projections onto the
  // orthonormal basis built so far. Kept as running sums so each iteration
  // costs one pass over the dictionary.
  Eigen::VectorXd anorm2(K);
  for (Eigen::Index k = 0; k < K; ++k)
    anorm2[k] = atoms.col(k).dot(weights.cwiseProduct(atoms.col(k)));
  Eigen::VectorXd proj2 = Eigen::VectorXd::Zero(K);

  while (st.relerr() > target && st.size() < cap) {
    const Eigen::VectorXd corr = atoms.transpose() * weights.cwiseProduct(st.residual);

    Eigen::Index best = -1;
    double best_score = 0;
    for (Eigen::Index k = 0; k < K; ++k) {
      double out2 = anorm2[k] - proj2[k];
      if (out2 <= kExclusionTol * kExclusionTol * anorm2[k]) continue;
      // The running difference bottoms out at roundoff (about machine epsilon
      // times anorm2), which would keep an exactly-dependent atom above the
      // exclusion threshold forever; measure a near-dependent candidate
      // explicitly before judging it.  The refreshed proj2 makes the cheap
      // test above final from the next iteration on, so each dependent atom
      // pays for this at most once.
      if (st.size() > 0 && out2 <= kRecomputeTol * kRecomputeTol * anorm2[k]) {
        Eigen::VectorXd p = atoms.col(k);
        const auto Q = st.ortho.leftCols(st.size());
        for (int pass = 0; pass < 2; ++pass)
          p -= Q * (Q.transpose() * weights.cwiseProduct(p));
        out2 = p.dot(weights.cwiseProduct(p));
        proj2[k] = anorm2[k] - out2;
        if (out2 <= kExclusionTol * kExclusionTol * anorm2[k]) continue;
      }
      const double score = std::abs(corr[k]) / std::sqrt(out2);
      if (best < 0 || score > best_score * (1 + kTieSlack)) {
        best = k;
        best_score = score;
      }
    }
    if (best < 0 || best_score == 0) {
      finalize(st, atoms, weights, f);
      std::ostringstream msg;
      msg << "pursuit stagnated at " << st.size() << " atoms, relative error " << st.relerr();
      throw StagnationError(msg.str(), std::move(st));
    }

    // Orthogonalize against the current basis; one reorthogonalization pass
    // keeps the basis orthonormal to working precision.
    Eigen::VectorXd v = atoms.col(best);
    const int s = st.size();
    if (s > 0) {
      const auto Q = st.ortho.leftCols(s);
      for (int pass = 0; pass < 2; ++pass) v -= Q * (Q.transpose() * weights.cwiseProduct(v));
    }
    const double vnorm = weighted_norm(v, weights);
    if (!(vnorm > 0)) {  // fully inside the span after all; drop the candidate
      proj2[best] = anorm2[best];
      continue;
    }
    st.ortho.col(s) = v / vnorm;
    st.selected.push_back(best);

    const Eigen::VectorXd wq = weights.cwiseProduct(st.ortho.col(s));
    st.residual -= wq.dot(st.residual) * st.ortho.col(s);
    st.residual_norm = weighted_norm(st.residual, weights);

    proj2 += (atoms.transpose() * wq).cwiseAbs2();
  }

  st.ortho.conservativeResize(n, st.size());
  finalize(st, atoms, weights, f);
  return st;
}

PursuitState oomp_select(const Dictionary& dict, const SampledSignal& signal,
                         const StopRule& stop) {
  check_signal_grid(dict, signal);
  const Grid g = signal.grid();
  const Eigen::MatrixXd A = sample_atoms(dict.atoms(), g);
  return oomp_select(A, g.weights(), signal.samples, stop);
}

PursuitState state_from_subset(const Eigen::MatrixXd& atoms, const Eigen::VectorXd& weights,
                               const Eigen::VectorXd& f,
                               const std::vector<Eigen::Index>& subset) {
  PursuitState st;
  st.selected = subset;
  st.signal_norm = weighted_norm(f, weights);
  const auto s = static_cast<Eigen::Index>(subset.size());
  if (s > 0) {
    const Eigen::VectorXd sqw = weights.cwiseSqrt();
    Eigen::MatrixXd ws(atoms.rows(), s);
    for (Eigen::Index j = 0; j < s; ++j)
      ws.col(j) = atoms.col(subset[static_cast<std::size_t>(j)]).cwiseProduct(sqw);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(ws);
    Eigen::MatrixXd thin_q =
        qr.householderQ() * Eigen::MatrixXd::Identity(atoms.rows(), s);
    st.ortho = thin_q.array().colwise() / sqw.array();
  } else {
    st.ortho.resize(atoms.rows(), 0);
  }
  finalize(st, atoms, weights, f);
  return st;
}

PursuitState backward_prune(const PursuitState& state, const Eigen::MatrixXd& atoms,
                            const Eigen::VectorXd& weights, const Eigen::VectorXd& f,
                            double target_relerr) {
  const double target = std::max(target_relerr, kMinTarget);
  PursuitState cur = state;
  const Eigen::VectorXd sqw = weights.cwiseSqrt();

  while (cur.size() > 1) {
    const auto s = static_cast<Eigen::Index>(cur.selected.size());
    Eigen::MatrixXd ws(atoms.rows(), s);
    for (Eigen::Index j = 0; j < s; ++j)
      ws.col(j) = atoms.col(cur.selected[static_cast<std::size_t>(j)]).cwiseProduct(sqw);
    const Eigen::MatrixXd gram = ws.transpose() * ws;
    const Eigen::MatrixXd gram_inv =
        Eigen::LDLT<Eigen::MatrixXd>(gram).solve(Eigen::MatrixXd::Identity(s, s));

    // Removing atom j raises the residual sum of squares by c_j^2 / (G^-1)_jj.
    Eigen::Index drop = -1;
    double min_delta = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < s; ++j) {
      const double dinv = gram_inv(j, j);
      const double delta =
          dinv > 0 ? cur.coefficients[j] * cur.coefficients[j] / dinv : 0.0;
      if (delta < min_delta) {
        min_delta = delta;
        drop = j;
      }
    }

    std::vector<Eigen::Index> subset = cur.selected;
    subset.erase(subset.begin() + drop);
    PursuitState trial = state_from_subset(atoms, weights, f, subset);
    if (trial.relerr() <= target + kPruneSlack)
      cur = std::move(trial);
    else
      break;
  }
  return cur;
}

ApproxResult approximate(const Dictionary& dict, const SampledSignal& signal,
                         const StopRule& stop) {
  check_signal_grid(dict, signal);
  const Grid g = signal.grid();
  const Eigen::MatrixXd A = sample_atoms(dict.atoms(), g);

  PursuitState st = oomp_select(A, g.weights(), signal.samples, stop);
  st = backward_prune(st, A, g.weights(), signal.samples, stop.target_relerr);

  ApproxResult res;
  res.reconstruction = signal.samples - st.residual;
  res.atoms_used = st.size();
  res.relative_error = st.relerr();
  res.state = std::move(st);
  return res;
}

}  // namespace splinedict
