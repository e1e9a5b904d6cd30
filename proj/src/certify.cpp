#include <splinedict/certify.hpp>

#include <Eigen/Dense>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace splinedict {

namespace {

constexpr double kRankRelTol = 1e-8;  // on singular values, relative to the largest

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct SpanBasis {
  Eigen::MatrixXd ortho;  // weighted-orthonormal columns spanning the sampled system
  Eigen::VectorXd singular_values;
  long rank = 0;
};

/// Thin SVD of sqrt(W)*columns; `ortho` keeps only the numerical-rank part.
SpanBasis span_basis(const Eigen::MatrixXd& weighted_cols) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(weighted_cols, Eigen::ComputeThinU);
  SpanBasis sb;
  sb.singular_values = svd.singularValues();
  const double smax = sb.singular_values.size() ? sb.singular_values[0] : 0.0;
  long r = 0;
  while (r < sb.singular_values.size() && sb.singular_values[r] > kRankRelTol * smax) ++r;
  sb.rank = r;
  sb.ortho = svd.matrixU().leftCols(r);
  return sb;
}

/// Largest relative projection residual of the columns of `targets` onto the
/// orthonormal span columns (all weighted by sqrt(W) already).
double max_projection_residual(const Eigen::MatrixXd& span_ortho, const Eigen::MatrixXd& targets) {
  double worst = 0.0;
  const Eigen::MatrixXd coef = span_ortho.transpose() * targets;
  const Eigen::MatrixXd res = targets - span_ortho * coef;
  for (long j = 0; j < targets.cols(); ++j) {
    const double n = targets.col(j).norm();
    if (n > 0.0) worst = std::max(worst, res.col(j).norm() / n);
  }
  return worst;
}

}  // namespace

void CertificationReport::write(std::ostream& os) const {
  os << "m: " << m << "\n";
  os << "b: " << fmt(b) << "\n";
  os << "b_prime: " << fmt(b_prime) << "\n";
  os << "K: " << K << "\n";
  os << "rank: " << rank << "\n";
  os << "expected_dim: " << expected_dim << "\n";
  os << "max_residual_fine_in_dict: " << fmt(max_residual_fine_in_dict) << "\n";
  os << "max_residual_dict_in_fine: " << fmt(max_residual_dict_in_fine) << "\n";
  os << "A: " << fmt(lower_frame_bound) << "\n";
  os << "B: " << fmt(upper_frame_bound) << "\n";
  os << "pass: " << (pass ? "true" : "false") << "\n";
}

void CertificationReport::write(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write(os);
}

CertificationReport certify_span_equality(const Dictionary& dict, const Grid& grid,
                                          BasisKind fine_basis) {
  const Eigen::VectorXd sw = grid.weights().cwiseSqrt();
  const Eigen::MatrixXd dict_cols = sw.asDiagonal() * sample_atoms(dict.atoms(), grid);
  const Eigen::MatrixXd fine_cols =
      sw.asDiagonal() * sample_atoms(basis_atoms(dict.fine_space(), fine_basis), grid);

  const SpanBasis dict_span = span_basis(dict_cols);
  const SpanBasis fine_span = span_basis(fine_cols);

  CertificationReport rep;
  rep.m = dict.order();
  rep.b = dict.b();
  rep.b_prime = dict.b_prime();
  rep.K = dict.size();
  rep.rank = dict_span.rank;
  rep.expected_dim = dict.fine_dimension();
  rep.max_residual_fine_in_dict = max_projection_residual(dict_span.ortho, fine_cols);
  rep.max_residual_dict_in_fine = max_projection_residual(fine_span.ortho, dict_cols);
  // Gram eigenvalues are the squared singular values of sqrt(W)*atoms; the
  // span dimension separates the frame spectrum from the null directions.
  rep.upper_frame_bound = dict_span.singular_values[0] * dict_span.singular_values[0];
  const long a_idx = std::min<long>(rep.expected_dim, dict_span.singular_values.size()) - 1;
  rep.lower_frame_bound = dict_span.singular_values[a_idx] * dict_span.singular_values[a_idx];
  rep.pass = rep.rank == rep.expected_dim && rep.max_residual_fine_in_dict < 1e-6 &&
             rep.max_residual_dict_in_fine < 1e-6;
  return rep;
}

FrameBounds frame_bounds(const Dictionary& dict, const Grid& grid) {
  const Eigen::VectorXd sw = grid.weights().cwiseSqrt();
  const SpanBasis sb = span_basis(sw.asDiagonal() * sample_atoms(dict.atoms(), grid));
  const long dim = dict.fine_dimension();
  if (sb.rank < dim)
    throw std::runtime_error("rank-deficient: dictionary Gram rank " + std::to_string(sb.rank) +
                             " below the expected span dimension " + std::to_string(dim) +
                             " - span certification failed");
  return FrameBounds{sb.singular_values[dim - 1] * sb.singular_values[dim - 1],
                     sb.singular_values[0] * sb.singular_values[0]};
}

}  // namespace splinedict
