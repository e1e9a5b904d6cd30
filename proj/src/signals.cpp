#include <splinedict/signals.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <splinedict/partition.hpp>
#include <splinedict/rng.hpp>

namespace splinedict {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SampledSignal gen_blocky(std::uint64_t seed, int n_blocks, double c, double d,
                         double breakpoint_step, double sample_step) {
  if (n_blocks < 1) throw std::invalid_argument("gen_blocky: n_blocks must be positive");
  if (!(d > c)) throw std::invalid_argument("gen_blocky: empty interval");
  if (sample_step == 0) sample_step = breakpoint_step;

  // Candidate breakpoints: the interior grid points of spacing breakpoint_step.
  const std::vector<double> interior =
      equidistant_points(c, d, breakpoint_step, Closure::open);
  const int needed = n_blocks - 1;
  if (needed > static_cast<int>(interior.size()))
    throw std::invalid_argument("gen_blocky: n_blocks exceeds available breakpoints");

  Rng rng(seed);

  // Partial Fisher-Yates: draw `needed` distinct candidates, then sort.
  std::vector<double> pool = interior;
  std::vector<double> breaks;
  breaks.reserve(needed);
  for (int i = 0; i < needed; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
    breaks.push_back(pool[i]);
  }
  std::sort(breaks.begin(), breaks.end());

  std::vector<double> amplitude(n_blocks);
  for (auto& a : amplitude) a = rng.uniform(-1.0, 1.0);

  const std::vector<double> t = equidistant_points(c, d, sample_step, Closure::closed);
  Eigen::VectorXd samples(static_cast<Eigen::Index>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    // Right-continuous: block index = number of breakpoints at or before t.
    const auto block =
        std::upper_bound(breaks.begin(), breaks.end(), t[i]) - breaks.begin();
    samples[static_cast<Eigen::Index>(i)] = amplitude[block];
  }

  SampledSignal sig;
  sig.lo = c;
  sig.hi = d;
  sig.step = sample_step;
  sig.samples = std::move(samples);
  std::ostringstream prov;
  prov << "blocky seed=" << seed << " blocks=" << n_blocks;
  sig.provenance = prov.str();
  return sig;
}

SampledSignal gen_chirp(double c, double d, double sample_step, const ChirpParams& params) {
  if (!(d > c)) throw std::invalid_argument("gen_chirp: empty interval");
  const double T = d - c;
  const std::vector<double> t = equidistant_points(c, d, sample_step, Closure::closed);
  Eigen::VectorXd samples(static_cast<Eigen::Index>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double u = t[i] - c;
    const double phase = params.f0 * u + (params.f1 - params.f0) / (2.0 * T) * u * u;
    double env = 1.0;
    switch (params.envelope) {
      case ChirpEnvelope::raised_cosine:
        env = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * u / T));
        break;
      case ChirpEnvelope::unit:
        env = 1.0;
        break;
      case ChirpEnvelope::zero:
        env = 0.0;
        break;
    }
    samples[static_cast<Eigen::Index>(i)] =
        env * std::sin(2.0 * std::numbers::pi * phase);
  }

  SampledSignal sig;
  sig.lo = c;
  sig.hi = d;
  sig.step = sample_step;
  sig.samples = std::move(samples);
  sig.provenance = "chirp";
  return sig;
}

ErrorMetrics metrics(const SampledSignal& ref, const SampledSignal& approx) {
  const double tol = 1e-9 * std::max(ref.step, approx.step);
  const bool same = ref.size() == approx.size() && std::abs(ref.lo - approx.lo) < tol &&
                    std::abs(ref.hi - approx.hi) < tol &&
                    std::abs(ref.step - approx.step) < tol;
  if (!same) throw std::invalid_argument("metrics: grid-mismatch");

  const Eigen::VectorXd diff = ref.samples - approx.samples;
  ErrorMetrics out;
  const double rn = ref.samples.norm();
  const double dn = diff.norm();
  out.l2_relative = dn == 0 ? 0.0 : dn / rn;
  out.sup = diff.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff();
  return out;
}

void write_signal_csv(const std::string& path, const SampledSignal& signal) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_signal_csv: cannot open " + path);
  out << "t,value\n";
  const Grid g = signal.grid();
  for (Eigen::Index i = 0; i < signal.size(); ++i)
    out << fmt17(g.points()[i]) << "," << fmt17(signal.samples[i]) << "\n";
  if (!out) throw std::runtime_error("write_signal_csv: write failed for " + path);
}

SampledSignal read_signal_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_signal_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_signal_csv: empty file");
  std::vector<double> t, v;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("read_signal_csv: malformed row: " + line);
    t.push_back(std::stod(line.substr(0, comma)));
    v.push_back(std::stod(line.substr(comma + 1)));
  }
  if (t.size() < 2) throw std::runtime_error("read_signal_csv: need at least two rows");

  SampledSignal sig;
  sig.lo = t.front();
  sig.hi = t.back();
  sig.step = (sig.hi - sig.lo) / static_cast<double>(t.size() - 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double expect = sig.lo + static_cast<double>(i) * sig.step;
    if (std::abs(t[i] - expect) > 1e-9 * std::max(1.0, sig.step))
      throw std::runtime_error("read_signal_csv: non-uniform t column");
  }
  sig.samples = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
  sig.provenance = "csv:" + path;
  return sig;
}

}  // namespace splinedict
