#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include <splinedict/grid.hpp>

namespace splinedict {

/// A function sampled on an equidistant closed grid over [lo, hi].
struct SampledSignal {
  double lo = 0;
  double hi = 0;
  double step = 0;
  Eigen::VectorXd samples;
  std::string provenance;  ///< human-readable description of how it was made

  [[nodiscard]] Eigen::Index size() const { return samples.size(); }
  [[nodiscard]] Grid grid() const { return Grid(lo, hi, step); }
};

/// Piecewise-constant signal with `n_blocks` blocks on [c, d]. Breakpoints are
/// drawn without replacement from the interior grid points of spacing
/// `breakpoint_step`; block amplitudes are iid uniform on [-1, 1]. Blocks are
/// right-continuous (each block owns its left endpoint; the last one also owns
/// d). Samples are taken with spacing `sample_step` (defaults to
/// `breakpoint_step` when 0).
[[nodiscard]] SampledSignal gen_blocky(std::uint64_t seed, int n_blocks, double c, double d,
                                       double breakpoint_step, double sample_step = 0);

enum class ChirpEnvelope { raised_cosine, unit, zero };

struct ChirpParams {
  double f0 = 1.0;  ///< start frequency, cycles per unit
  double f1 = 4.0;  ///< end frequency, cycles per unit
  ChirpEnvelope envelope = ChirpEnvelope::raised_cosine;
};

/// Linear chirp a(t) sin(2 pi (f0 u + (f1 - f0) u^2 / (2 T))), u = t - c,
/// T = d - c, with a raised-cosine (Hann) envelope by default.
[[nodiscard]] SampledSignal gen_chirp(double c, double d, double sample_step,
                                      const ChirpParams& params = {});

struct ErrorMetrics {
  double l2_relative = 0;  ///< ||ref - approx||_2 / ||ref||_2 (0 when ref == 0)
  double sup = 0;          ///< max_i |ref_i - approx_i|
};

/// Compares two signals on the same grid; throws "grid-mismatch" otherwise.
[[nodiscard]] ErrorMetrics metrics(const SampledSignal& ref, const SampledSignal& approx);

/// Writes "t,value" CSV with %.17g formatting and LF line endings.
void write_signal_csv(const std::string& path, const SampledSignal& signal);

/// Reads a signal written by write_signal_csv; infers lo, hi, and step from the
/// t column and validates uniform spacing.
[[nodiscard]] SampledSignal read_signal_csv(const std::string& path);

}  // namespace splinedict
