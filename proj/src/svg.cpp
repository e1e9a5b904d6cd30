#include <splinedict/svg.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace splinedict {

namespace {

constexpr int kMaxPoints = 2000;
constexpr int kMaxSeries = 64;

constexpr const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};
constexpr int kPaletteSize = 10;

std::string fmt(const char* format, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

// Tick spacing of the form {1, 2, 2.5, 5} * 10^k giving about `n` intervals.
double nice_step(double range, int n) {
  if (!(range > 0)) return 1.0;
  const double raw = range / n;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  double nice = 10.0;
  for (double cand : {1.0, 2.0, 2.5, 5.0}) {
    if (frac <= cand) {
      nice = cand;
      break;
    }
  }
  return nice * mag;
}

}  // namespace

void write_line_svg(const std::string& path, const Eigen::VectorXd& x,
                    const Eigen::MatrixXd& series, const PlotOptions& opts) {
  if (x.size() < 2) throw std::invalid_argument("write_line_svg: need at least two points");
  if (series.rows() != x.size())
    throw std::invalid_argument("write_line_svg: series rows must match x");

  const Eigen::Index n = x.size();
  const Eigen::Index n_series = std::min<Eigen::Index>(series.cols(), kMaxSeries);
  const Eigen::Index stride = (n + kMaxPoints - 1) / kMaxPoints;

  const double x0 = x[0];
  const double x1 = x[n - 1];
  double y0 = series.leftCols(n_series).minCoeff();
  double y1 = series.leftCols(n_series).maxCoeff();
  if (!(y1 > y0)) {
    y0 -= 1;
    y1 += 1;
  }
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;

  const double w = opts.width;
  const double h = opts.height;
  const double ml = 64, mr = 20, mt = opts.title.empty() ? 16 : 40, mb = 44;
  const double pw = w - ml - mr;
  const double ph = h - mt - mb;

  const auto sx = [&](double v) { return ml + (v - x0) / (x1 - x0) * pw; };
  const auto sy = [&](double v) { return mt + (y1 - v) / (y1 - y0) * ph; };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_line_svg: cannot open " + path);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << opts.width << " "
      << opts.height << "\" font-family=\"sans-serif\">\n";
  out << "<rect width=\"" << opts.width << "\" height=\"" << opts.height
      << "\" fill=\"white\"/>\n";
  if (!opts.title.empty())
    out << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << escape(opts.title) << "</text>\n";

  // Gridlines and tick labels.
  const double xstep = nice_step(x1 - x0, 5);
  for (double t = std::ceil(x0 / xstep) * xstep; t <= x1 + 1e-9 * xstep; t += xstep) {
    const double px = sx(t);
    out << "<line x1=\"" << fmt("%.2f", px) << "\" y1=\"" << fmt("%.2f", mt) << "\" x2=\""
        << fmt("%.2f", px) << "\" y2=\"" << fmt("%.2f", mt + ph)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt("%.2f", px) << "\" y=\"" << fmt("%.2f", mt + ph + 18)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << fmt("%.6g", t) << "</text>\n";
  }
  const double ystep = nice_step(y1 - y0, 5);
  for (double t = std::ceil(y0 / ystep) * ystep; t <= y1 + 1e-9 * ystep; t += ystep) {
    const double py = sy(t);
    out << "<line x1=\"" << fmt("%.2f", ml) << "\" y1=\"" << fmt("%.2f", py) << "\" x2=\""
        << fmt("%.2f", ml + pw) << "\" y2=\"" << fmt("%.2f", py)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt("%.2f", ml - 6) << "\" y=\"" << fmt("%.2f", py + 4)
        << "\" text-anchor=\"end\" font-size=\"12\">" << fmt("%.6g", t) << "</text>\n";
  }

  // Plot frame.
  out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  for (Eigen::Index j = 0; j < n_series; ++j) {
    out << "<polyline fill=\"none\" stroke=\"" << kPalette[j % kPaletteSize]
        << "\" stroke-width=\"1.5\" points=\"";
    for (Eigen::Index i = 0; i < n; i += stride) {
      out << fmt("%.2f", sx(x[i])) << "," << fmt("%.2f", sy(series(i, j))) << " ";
    }
    if ((n - 1) % stride != 0)
      out << fmt("%.2f", sx(x[n - 1])) << "," << fmt("%.2f", sy(series(n - 1, j)));
    out << "\"/>\n";
  }

  // Legend, when labels are provided and the plot is not too crowded.
  if (!opts.labels.empty() && n_series <= 12) {
    const double lx = ml + pw - 150;
    double ly = mt + 14;
    for (Eigen::Index j = 0; j < n_series && j < static_cast<Eigen::Index>(opts.labels.size());
         ++j) {
      out << "<line x1=\"" << fmt("%.2f", lx) << "\" y1=\"" << fmt("%.2f", ly - 4)
          << "\" x2=\"" << fmt("%.2f", lx + 22) << "\" y2=\"" << fmt("%.2f", ly - 4)
          << "\" stroke=\"" << kPalette[j % kPaletteSize] << "\" stroke-width=\"2\"/>\n";
      out << "<text x=\"" << fmt("%.2f", lx + 28) << "\" y=\"" << fmt("%.2f", ly)
          << "\" font-size=\"12\">" << escape(opts.labels[static_cast<std::size_t>(j)])
          << "</text>\n";
      ly += 16;
    }
  }

  out << "</svg>\n";
  if (!out) throw std::runtime_error("write_line_svg: write failed for " + path);
}

}  // namespace splinedict
