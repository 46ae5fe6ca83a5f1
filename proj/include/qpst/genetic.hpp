#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpst/dynamics.hpp"
#include "qpst/rng.hpp"

namespace qpst {

// Which value the Q-factor is pulled towards in the spectral penalty.
enum class QTargetMode {
  inverse_p,  // |Q - 1/p|
  pinch,      // |Q - (1/p)^{N-2}|, the Q-factor of an ideal pinch
};

struct GAConfig {
  std::size_t n_sites = 3;
  int p = 3;
  std::size_t generations = 200;
  std::size_t population_size = 1024;
  double mu_initial = 0.20;
  double mu_final = 0.05;
  double amplitude_lo = 1.0;  // mutation step amplitude a ~ U[lo, hi]
  double amplitude_hi = 10.0;
  double weight_fidelity = 1.0;  // A
  double weight_penalty = 1.0;   // B
  double t_max = kDefaultTimeWindow;
  std::size_t peak_grid = kDefaultPeakGrid;
  double init_lo = 0.0;
  double init_hi = 10.0;
  std::uint64_t seed = 1;
  std::size_t tournament_size = 3;
  std::size_t elite_count = 1;
  QTargetMode q_target = QTargetMode::inverse_p;
};

// Defaults for a chain of n sites: A = B = 1 up to N = 4, A = 4, B = 1 above.
GAConfig default_ga_config(std::size_t n_sites, int p);

// One message per violated constraint; empty when the config is usable.
std::vector<std::string> validate(const GAConfig& cfg);

double q_target_value(const GAConfig& cfg);

// Penalty assigned when the spectrum is degenerate.
constexpr double kDegeneratePenalty = 1e6;

struct Evaluation {
  double f_max = 0.0;
  double t_peak = 0.0;
  std::vector<double> eigenvalues;
  double upsilon = 0.0;
  double fitness = 0.0;
  bool degenerate = false;
};

struct Individual {
  std::vector<double> onsite;
  std::optional<Evaluation> eval;
};

// (A f - B u) / (A f + B u); 0 when the denominator vanishes.
double fitness(double f_max, double upsilon, double a, double b);

// mu_i - g (mu_i - mu_f) / G for 0 <= g <= G.
double mutation_rate(std::size_t g, const GAConfig& cfg);

// Copies the left half (ceil(N/2) sites) onto the right half.
std::vector<double> mirror_fold(std::vector<double> onsite);

// Each gene moves with probability `rate` by delta ~ U[-a, a], a ~ U[lo, hi];
// the result is folded and the cached evaluation dropped.
Individual mutate(const Individual& ind, double rate, const GAConfig& cfg, Rng& rng);

// Uniform crossover: every gene from either parent with probability 1/2.
Individual crossover(const Individual& first, const Individual& second, Rng& rng);

// Uniform chain with ind.onsite: peak fidelity 1 -> N on [0, t_max],
// spectral penalty and fitness. A degenerate spectrum gets
// kDegeneratePenalty instead of an exception.
Individual evaluate(Individual ind, const GAConfig& cfg);
Evaluation evaluate_onsite(const std::vector<double>& onsite, const GAConfig& cfg);

struct GenerationStats {
  double best_fitness = 0.0;
  double mean_fitness = 0.0;
  double best_f_max = 0.0;
  double best_upsilon = 0.0;
};

struct GAResult {
  Individual best;
  std::vector<GenerationStats> history;
  GAConfig config;
};

struct RunOptions {
  unsigned threads = 1;
};

// Evaluate, select (tournament), cross over and mutate for cfg.generations
// generations; the elite survive unchanged. Offspring in slot i of
// generation g draw from make_stream(seed, g, i), so the result does not
// depend on the thread count.
GAResult run_ga(const GAConfig& cfg, const RunOptions& opts = {});

enum class Gauge { min_zero, centre_zero };

// On-site energies shifted by a constant so that the minimum (or the central
// site, the left-of-centre one for even N) is zero.
std::vector<double> gauge_fixed(const std::vector<double>& onsite, Gauge gauge = Gauge::min_zero);

}  // namespace qpst
