#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

namespace splinedict {

struct PlotOptions {
  std::string title;
  int width = 960;
  int height = 540;
  std::vector<std::string> labels;  ///< optional legend entries, one per series
};

/// Writes a self-contained SVG line plot. `x` holds the abscissae; each column
/// of `series` is one curve. Long inputs are decimated to at most 2000 points
/// per curve and at most 64 curves are drawn (data files are the full record;
/// the plot is a view).
void write_line_svg(const std::string& path, const Eigen::VectorXd& x,
                    const Eigen::MatrixXd& series, const PlotOptions& opts = {});

}  // namespace splinedict
