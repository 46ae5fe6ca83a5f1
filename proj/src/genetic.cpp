#include "qpst/genetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qpst/chain.hpp"
#include "qpst/errors.hpp"
#include "qpst/parallel.hpp"
#include "qpst/spectrum.hpp"

namespace qpst {

GAConfig default_ga_config(std::size_t n_sites, int p) {
  GAConfig cfg;
  cfg.n_sites = n_sites;
  cfg.p = p;
  if (n_sites >= 5) {
    cfg.weight_fidelity = 4.0;
    cfg.weight_penalty = 1.0;
  }
  return cfg;
}

std::vector<std::string> validate(const GAConfig& cfg) {
  std::vector<std::string> errs;
  if (cfg.n_sites < 2) errs.push_back("n_sites must be at least 2");
  if (cfg.p < 1 || cfg.p % 2 == 0) errs.push_back("p must be a positive odd integer");
  if (cfg.generations < 1) errs.push_back("generations must be at least 1");
  if (cfg.population_size < 2) errs.push_back("population_size must be at least 2");
  if (!(cfg.mu_final >= 0.0 && cfg.mu_final <= cfg.mu_initial && cfg.mu_initial <= 1.0)) {
    errs.push_back("mutation rates must satisfy 0 <= mu_final <= mu_initial <= 1");
  }
  if (!(cfg.amplitude_lo >= 0.0 && cfg.amplitude_lo <= cfg.amplitude_hi)) {
    errs.push_back("mutation amplitude range must satisfy 0 <= lo <= hi");
  }
  if (!(cfg.weight_fidelity > 0.0)) errs.push_back("weight_fidelity (A) must be positive");
  if (!(cfg.weight_penalty > 0.0)) errs.push_back("weight_penalty (B) must be positive");
  if (!(cfg.t_max > 0.0)) errs.push_back("t_max must be positive");
  if (cfg.peak_grid < 2) errs.push_back("peak_grid must be at least 2");
  if (!(cfg.init_lo <= cfg.init_hi)) errs.push_back("init range must satisfy lo <= hi");
  if (cfg.tournament_size < 1) errs.push_back("tournament_size must be at least 1");
  if (cfg.elite_count > cfg.population_size) errs.push_back("elite_count cannot exceed population_size");
  return errs;
}

double q_target_value(const GAConfig& cfg) {
  if (cfg.q_target == QTargetMode::pinch && cfg.n_sites >= 3) return pinch_q_target(cfg.n_sites, cfg.p);
  return inverse_p_target(cfg.p);
}

double fitness(double f_max, double upsilon, double a, double b) {
  const double den = a * f_max + b * upsilon;
  if (den == 0.0) return 0.0;
  return (a * f_max - b * upsilon) / den;
}

double mutation_rate(std::size_t g, const GAConfig& cfg) {
  if (g > cfg.generations) throw InvalidArgument("generation index beyond G");
  // Exact at g = 0 and g = G.
  const double frac = static_cast<double>(g) / static_cast<double>(cfg.generations);
  return std::lerp(cfg.mu_initial, cfg.mu_final, frac);
}

std::vector<double> mirror_fold(std::vector<double> onsite) {
  const std::size_t n = onsite.size();
  for (std::size_t i = (n + 1) / 2; i < n; ++i) onsite[i] = onsite[n - 1 - i];
  return onsite;
}

Individual mutate(const Individual& ind, double rate, const GAConfig& cfg, Rng& rng) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw InvalidArgument("mutation rate must lie in [0, 1]");
  Individual out{ind.onsite, std::nullopt};
  const std::size_t half = (out.onsite.size() + 1) / 2;
  bool changed = false;
  for (std::size_t i = 0; i < half; ++i) {
    if (!bernoulli(rng, rate)) continue;
    const double amp = uniform(rng, cfg.amplitude_lo, cfg.amplitude_hi);
    out.onsite[i] += uniform(rng, -amp, amp);
    changed = true;
  }
  out.onsite = mirror_fold(std::move(out.onsite));
  if (!changed && out.onsite == ind.onsite) out.eval = ind.eval;
  return out;
}

Individual crossover(const Individual& first, const Individual& second, Rng& rng) {
  if (first.onsite.size() != second.onsite.size()) {
    throw InvalidArgument("crossover parents differ in length");
  }
  Individual child{first.onsite, std::nullopt};
  const std::size_t half = (child.onsite.size() + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    if (bernoulli(rng, 0.5)) child.onsite[i] = second.onsite[i];
  }
  child.onsite = mirror_fold(std::move(child.onsite));
  if (child.onsite == first.onsite) {
    child.eval = first.eval;
  } else if (child.onsite == second.onsite) {
    child.eval = second.eval;
  }
  return child;
}

Evaluation evaluate_onsite(const std::vector<double>& onsite, const GAConfig& cfg) {
  const auto spec = uniform_chain(onsite.size(), onsite);
  const auto eig = diagonalize(build_hamiltonian(spec));
  const auto peak = max_fidelity(eig, Site{1}, Site{spec.n_sites}, cfg.t_max, cfg.peak_grid);

  Evaluation ev;
  ev.f_max = peak.fidelity;
  ev.t_peak = peak.time;
  ev.eigenvalues = eig.values;
  // Two levels impose no spacing pattern: the penalty stays 0.
  if (spec.n_sites >= 3) {
    try {
      ev.upsilon = spectral_report(eig.values, cfg.p, q_target_value(cfg)).penalty;
    } catch (const DegenerateSpectrum&) {
      ev.upsilon = kDegeneratePenalty;
      ev.degenerate = true;
    }
  }
  if (!std::isfinite(ev.upsilon)) {
    ev.upsilon = kDegeneratePenalty;
    ev.degenerate = true;
  }
  ev.fitness = fitness(ev.f_max, ev.upsilon, cfg.weight_fidelity, cfg.weight_penalty);
  return ev;
}

Individual evaluate(Individual ind, const GAConfig& cfg) {
  if (ind.onsite.size() != cfg.n_sites) throw InvalidArgument("individual does not match n_sites");
  if (!ind.eval) ind.eval = evaluate_onsite(ind.onsite, cfg);
  return ind;
}

namespace {

double fitness_of(const Individual& ind) { return ind.eval->fitness; }

// Indices ordered by descending fitness; ties keep the lower index first.
std::vector<std::size_t> rank(const std::vector<Individual>& pop) {
  std::vector<std::size_t> order(pop.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fitness_of(pop[a]) > fitness_of(pop[b]); });
  return order;
}

std::size_t tournament(const std::vector<Individual>& pop, std::size_t size, Rng& rng) {
  std::size_t winner = uniform_index(rng, pop.size());
  for (std::size_t k = 1; k < size; ++k) {
    const std::size_t c = uniform_index(rng, pop.size());
    const double fc = fitness_of(pop[c]);
    const double fw = fitness_of(pop[winner]);
    if (fc > fw || (fc == fw && c < winner)) winner = c;
  }
  return winner;
}

}  // namespace

GAResult run_ga(const GAConfig& cfg, const RunOptions& opts) {
  if (const auto errs = validate(cfg); !errs.empty()) {
    std::string msg = "invalid GA config:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw InvalidArgument(msg);
  }
  const std::size_t pop_size = cfg.population_size;
  const std::size_t n = cfg.n_sites;

  std::vector<Individual> pop(pop_size);
  for (std::size_t i = 0; i < pop_size; ++i) {
    auto rng = make_stream(cfg.seed, 0, i);
    std::vector<double> genes(n);
    for (auto& g : genes) g = uniform(rng, cfg.init_lo, cfg.init_hi);
    pop[i].onsite = mirror_fold(std::move(genes));
  }

  GAResult result;
  result.config = cfg;
  result.history.reserve(cfg.generations);
  std::optional<Individual> best_ever;

  for (std::size_t g = 0; g < cfg.generations; ++g) {
    parallel_for(pop_size, opts.threads, [&](std::size_t i) {
      if (!pop[i].eval) pop[i].eval = evaluate_onsite(pop[i].onsite, cfg);
    });

    const auto order = rank(pop);
    const Individual& leader = pop[order.front()];
    GenerationStats stats;
    stats.best_fitness = fitness_of(leader);
    stats.best_f_max = leader.eval->f_max;
    stats.best_upsilon = leader.eval->upsilon;
    double sum = 0.0;
    for (const auto& ind : pop) sum += fitness_of(ind);
    stats.mean_fitness = sum / static_cast<double>(pop_size);
    result.history.push_back(stats);
    if (!best_ever || fitness_of(leader) > fitness_of(*best_ever)) best_ever = leader;

    if (g + 1 == cfg.generations) break;

    std::vector<Individual> next(pop_size);
    const std::size_t elites = std::min(cfg.elite_count, pop_size);
    for (std::size_t e = 0; e < elites; ++e) next[e] = pop[order[e]];
    const double rate = mutation_rate(g + 1, cfg);
    parallel_for(pop_size - elites, opts.threads, [&](std::size_t k) {
      const std::size_t slot = elites + k;
      auto rng = make_stream(cfg.seed, g + 1, slot);
      const std::size_t a = tournament(pop, cfg.tournament_size, rng);
      const std::size_t b = tournament(pop, cfg.tournament_size, rng);
      next[slot] = mutate(crossover(pop[a], pop[b], rng), rate, cfg, rng);
    });
    pop = std::move(next);
  }

  result.best = *best_ever;
  return result;
}

std::vector<double> gauge_fixed(const std::vector<double>& onsite, Gauge gauge) {
  if (onsite.empty()) return {};
  double shift = 0.0;
  if (gauge == Gauge::min_zero) {
    shift = *std::min_element(onsite.begin(), onsite.end());
  } else {
    shift = onsite[(onsite.size() - 1) / 2];
  }
  std::vector<double> out(onsite.size());
  for (std::size_t i = 0; i < onsite.size(); ++i) out[i] = onsite[i] - shift;
  return out;
}

}  // namespace qpst
