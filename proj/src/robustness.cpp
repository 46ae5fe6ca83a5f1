#include "qpst/robustness.hpp"

#include <algorithm>
#include <cmath>

#include "qpst/eigensystem.hpp"
#include "qpst/errors.hpp"
#include "qpst/kernels.hpp"
#include "qpst/parallel.hpp"

namespace qpst {
namespace {

double pow10(int k) { return std::pow(10.0, static_cast<double>(k)); }

Peak chain_peak(const ChainSpec& spec, double t_max, std::size_t grid) {
  const auto eig = diagonalize(build_hamiltonian(spec));
  return max_fidelity(eig, Site{1}, Site{spec.n_sites}, t_max, grid);
}

// Samples are processed in blocks so memory stays bounded; each block is
// reduced in sample order.
constexpr std::size_t kBlock = 256;

}  // namespace

double round_sig_figs_once(double x, int s) {
  if (s < 1) throw InvalidArgument("significant figures must be at least 1");
  if (x == 0.0 || !std::isfinite(x)) return x;
  int e = static_cast<int>(std::floor(std::log10(std::abs(x))));
  // log10 can land one off next to exact powers of ten.
  if (std::abs(x) < pow10(e)) --e;
  if (std::abs(x) >= pow10(e + 1)) ++e;
  const int k = s - 1 - e;
  if (k >= 0) {
    const double scale = pow10(k);
    return std::round(x * scale) / scale;
  }
  const double scale = pow10(-k);
  return std::round(x / scale) * scale;
}

double round_sig_figs(double x, int s) {
  if (s < 1) throw InvalidArgument("significant figures must be at least 1");
  if (s >= kReferenceSigFigs) return round_sig_figs_once(x, s);
  double v = round_sig_figs_once(x, kReferenceSigFigs);
  for (int k = kReferenceSigFigs - 1; k >= s; --k) v = round_sig_figs_once(v, k);
  return v;
}

std::vector<double> round_onsite(const std::vector<double>& onsite, int s) {
  std::vector<double> out(onsite.size());
  std::transform(onsite.begin(), onsite.end(), out.begin(), [s](double x) { return round_sig_figs(x, s); });
  return out;
}

Peak rounded_fidelity(const ChainSpec& spec, int s, double t_max, std::size_t grid) {
  ChainSpec rounded = spec;
  rounded.onsite = round_onsite(spec.onsite, s);
  return chain_peak(rounded, t_max, grid);
}

ChainSpec perturb(const ChainSpec& spec, double xi, Rng& rng) {
  if (!(xi >= 0.0)) throw InvalidArgument("xi must be non-negative");
  ChainSpec out = spec;
  for (double& e : out.onsite) e += spec.j_max * uniform(rng, -0.5, 0.5) * xi;
  return out;
}

MonteCarloResult monte_carlo(const ChainSpec& spec, double xi, std::size_t samples, double t_max,
                             std::uint64_t seed, const MonteCarloOptions& opts) {
  validate(spec);
  if (samples < 1) throw InvalidArgument("at least one sample required");
  if (!(t_max > 0.0)) throw InvalidArgument("t_max must be positive");
  if (opts.trace_steps < 2) throw InvalidArgument("trace needs at least 2 steps");

  MonteCarloResult r;
  r.xi = xi;
  r.samples = samples;
  r.seed = seed;
  const std::size_t steps = opts.trace_steps;
  const double dt = t_max / static_cast<double>(steps - 1);
  r.times.resize(steps);
  for (std::size_t k = 0; k < steps; ++k) r.times[k] = static_cast<double>(k) * dt;
  r.times.back() = t_max;

  // Welford accumulators, updated in sample order.
  std::vector<double> mean(steps, 0.0);
  std::vector<double> m2(steps, 0.0);
  double peak_mean = 0.0;
  double peak_m2 = 0.0;
  std::size_t seen = 0;

  std::vector<double> peaks(kBlock);
  std::vector<double> curves(kBlock * steps);
  for (std::size_t start = 0; start < samples; start += kBlock) {
    const std::size_t count = std::min(kBlock, samples - start);
    parallel_for(count, opts.threads, [&](std::size_t i) {
      auto rng = make_stream(seed, start + i);
      const auto eig = diagonalize(build_hamiltonian(perturb(spec, xi, rng)));
      const auto w = transfer_weights(eig, Site{1}, Site{spec.n_sites});
      std::span<double> curve(curves.data() + i * steps, steps);
      kernels::transfer_probability_grid(eig.values, w, 0.0, dt, curve);
      peaks[i] = max_fidelity(eig, Site{1}, Site{spec.n_sites}, t_max, opts.peak_grid).fidelity;
    });
    for (std::size_t i = 0; i < count; ++i) {
      ++seen;
      const double inv = 1.0 / static_cast<double>(seen);
      const double dp = peaks[i] - peak_mean;
      peak_mean += dp * inv;
      peak_m2 += dp * (peaks[i] - peak_mean);
      const double* curve = curves.data() + i * steps;
      for (std::size_t k = 0; k < steps; ++k) {
        const double d = curve[k] - mean[k];
        mean[k] += d * inv;
        m2[k] += d * (curve[k] - mean[k]);
      }
    }
  }

  const double denom = samples > 1 ? static_cast<double>(samples - 1) : 1.0;
  r.mean_f_max = peak_mean;
  r.stddev_f_max = samples > 1 ? std::sqrt(peak_m2 / denom) : 0.0;
  r.stderr_f_max = r.stddev_f_max / std::sqrt(static_cast<double>(samples));
  r.mean_trace = std::move(mean);
  r.std_trace.resize(steps);
  for (std::size_t k = 0; k < steps; ++k) r.std_trace[k] = samples > 1 ? std::sqrt(m2[k] / denom) : 0.0;
  const auto top = std::max_element(r.mean_trace.begin(), r.mean_trace.end());
  r.mean_trace_peak = {r.times[static_cast<std::size_t>(top - r.mean_trace.begin())], *top};
  return r;
}

RobustnessReport robustness_report(const ChainSpec& spec, const std::vector<int>& sig_figs,
                                   const std::vector<double>& xis, std::size_t samples, double t_max,
                                   std::uint64_t seed, const MonteCarloOptions& opts) {
  RobustnessReport rep;
  rep.spec = spec;
  rep.t_max = t_max;
  rep.base = chain_peak(spec, t_max, opts.peak_grid);
  for (int s : sig_figs) {
    RoundingResult rr;
    rr.sig_figs = s;
    rr.onsite = round_onsite(spec.onsite, s);
    rr.peak = rounded_fidelity(spec, s, t_max, opts.peak_grid);
    rep.rounding.push_back(std::move(rr));
  }
  for (double xi : xis) rep.monte_carlo.push_back(monte_carlo(spec, xi, samples, t_max, seed, opts));
  return rep;
}

}  // namespace qpst
