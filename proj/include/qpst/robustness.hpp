#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qpst/chain.hpp"
#include "qpst/dynamics.hpp"
#include "qpst/rng.hpp"

namespace qpst {

// Precision the rounding cascade starts from.
constexpr int kReferenceSigFigs = 4;

// One rounding step: half away from zero to s significant figures.
double round_sig_figs_once(double x, int s);

// Rounds to s significant figures the way a table of decreasing precision is
// built: first to kReferenceSigFigs, then one digit at a time down to s.
// 1.452 -> 1.45 (3), 1.5 (2), 2 (1). For s >= kReferenceSigFigs this is a
// single step.
double round_sig_figs(double x, int s);

std::vector<double> round_onsite(const std::vector<double>& onsite, int s);

// Peak 1 -> N fidelity of the spec with every on-site energy rounded to s
// significant figures (couplings untouched).
Peak rounded_fidelity(const ChainSpec& spec, int s, double t_max = kDefaultTimeWindow,
                      std::size_t grid = kDefaultPeakGrid);

// eps_i + J_max r_i xi with r_i ~ U[-0.5, 0.5] drawn independently per site;
// mirror symmetry is generally lost.
ChainSpec perturb(const ChainSpec& spec, double xi, Rng& rng);

struct MonteCarloOptions {
  std::size_t peak_grid = kDefaultPeakGrid;
  std::size_t trace_steps = 3001;
  unsigned threads = 1;
};

// Statistics of the peak fidelity over perturbed copies of a chain, plus the
// time-resolved mean fidelity with its standard deviation band.
struct MonteCarloResult {
  double xi = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double mean_f_max = 0.0;    // mean over samples of each sample's peak
  double stddev_f_max = 0.0;  // sample standard deviation (n - 1)
  double stderr_f_max = 0.0;  // stddev / sqrt(samples)
  std::vector<double> times;
  std::vector<double> mean_trace;
  std::vector<double> std_trace;
  Peak mean_trace_peak;  // maximum of mean_trace on the grid
};

// Sample k uses make_stream(seed, k), independent of thread count.
MonteCarloResult monte_carlo(const ChainSpec& spec, double xi, std::size_t samples, double t_max,
                             std::uint64_t seed, const MonteCarloOptions& opts = {});

struct RoundingResult {
  int sig_figs = 0;
  std::vector<double> onsite;
  Peak peak;
};

struct RobustnessReport {
  ChainSpec spec;
  double t_max = kDefaultTimeWindow;
  Peak base;
  std::vector<RoundingResult> rounding;
  std::vector<MonteCarloResult> monte_carlo;
};

RobustnessReport robustness_report(const ChainSpec& spec, const std::vector<int>& sig_figs,
                                   const std::vector<double>& xis, std::size_t samples, double t_max,
                                   std::uint64_t seed, const MonteCarloOptions& opts = {});

}  // namespace qpst
