#pragma once

#include <splinedict/dictionary.hpp>
#include <splinedict/grid.hpp>

#include <iosfwd>
#include <string>

namespace splinedict {

struct CertificationReport {
  int m = 0;
  double b = 0;
  double b_prime = 0;
  long K = 0;
  long rank = 0;
  long expected_dim = 0;
  double max_residual_fine_in_dict = 0;  // fine basis atoms projected onto the dictionary span
  double max_residual_dict_in_fine = 0;  // dictionary atoms projected onto the fine basis span
  double lower_frame_bound = 0;          // written as "A"
  double upper_frame_bound = 0;          // written as "B"
  bool pass = false;

  /// "key: value" lines, one per field.
  void write(std::ostream& os) const;
  void write(const std::string& path) const;
};

struct FrameBounds {
  double lower = 0;
  double upper = 0;
};

/// Certifies numerically that the dictionary spans the fine spline space:
/// both cross-projection residual maxima below 1e-6 in the grid norm, and the
/// numerical rank of the dictionary Gram (threshold 1e-8 times the largest
/// singular value) equal to the fine dimension. The fine basis used for the
/// dictionary-into-fine direction is selectable.
[[nodiscard]] CertificationReport certify_span_equality(const Dictionary& dict, const Grid& grid,
                                                        BasisKind fine_basis = BasisKind::esep);

/// Extremal nonzero eigenvalues of the discretized frame operator
/// f -> sum_k <f, phi_k> phi_k restricted to the dictionary's span: the
/// largest and the expected_dim-th Gram eigenvalues. Throws when the
/// numerical rank falls below the expected span dimension (failed span
/// certification).
[[nodiscard]] FrameBounds frame_bounds(const Dictionary& dict, const Grid& grid);

}  // namespace splinedict
