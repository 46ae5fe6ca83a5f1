#include "qpst/genetic.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qpst/errors.hpp"
#include "qpst/io.hpp"
#include "qpst/spectrum.hpp"

namespace qpst {
namespace {

GAConfig small_config(std::size_t n, int p) {
  GAConfig cfg = default_ga_config(n, p);
  cfg.population_size = 64;
  cfg.generations = 12;
  cfg.peak_grid = 1000;
  return cfg;
}

TEST(Genetic, FitnessFormula) {
  EXPECT_DOUBLE_EQ(fitness(0.9, 0.1, 1.0, 1.0), 0.8);
  EXPECT_DOUBLE_EQ(fitness(0.9, 0.1, 4.0, 1.0), (3.6 - 0.1) / 3.7);
  EXPECT_EQ(fitness(0.0, 0.0, 1.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(fitness(1.0, 0.0, 1.0, 1.0), 1.0);
  EXPECT_LT(fitness(0.5, kDegeneratePenalty, 1.0, 1.0), -0.99);
}

TEST(GeneticProperty, MutationScheduleEndpointsAreExact) {
  for (std::size_t generations : {1u, 3u, 7u, 200u, 999u}) {
    GAConfig cfg;
    cfg.generations = generations;
    for (auto [mi, mf] : {std::pair{0.2, 0.05}, std::pair{0.3, 0.1}, std::pair{0.7, 0.0}}) {
      cfg.mu_initial = mi;
      cfg.mu_final = mf;
      EXPECT_EQ(mutation_rate(0, cfg), mi);
      EXPECT_EQ(mutation_rate(generations, cfg), mf);
    }
  }
  GAConfig cfg;
  EXPECT_NEAR(mutation_rate(100, cfg), 0.125, 1e-15);
  EXPECT_THROW(mutation_rate(cfg.generations + 1, cfg), InvalidArgument);
}

TEST(Genetic, DefaultsAndValidation) {
  const auto small = default_ga_config(4, 3);
  EXPECT_EQ(small.weight_fidelity, 1.0);
  EXPECT_EQ(small.weight_penalty, 1.0);
  EXPECT_EQ(small.generations, 200u);
  EXPECT_EQ(small.population_size, 1024u);
  const auto large = default_ga_config(5, 3);
  EXPECT_EQ(large.weight_fidelity, 4.0);
  EXPECT_EQ(large.weight_penalty, 1.0);
  EXPECT_TRUE(validate(large).empty());

  GAConfig bad;
  bad.p = 2;
  bad.population_size = 1;
  bad.mu_final = 0.5;
  bad.weight_penalty = 0.0;
  EXPECT_EQ(validate(bad).size(), 4u);
}

TEST(Genetic, MirrorFold) {
  EXPECT_EQ(mirror_fold({1, 2, 3, 4, 5}), (std::vector<double>{1, 2, 3, 2, 1}));
  EXPECT_EQ(mirror_fold({1, 2, 3, 4}), (std::vector<double>{1, 2, 2, 1}));
  EXPECT_EQ(mirror_fold({7}), (std::vector<double>{7}));
}

TEST(Genetic, MutationKeepsMirrorSymmetryAndRespectsAmplitude) {
  GAConfig cfg = default_ga_config(7, 3);
  auto rng = make_stream(9);
  Individual ind{mirror_fold({1, 2, 3, 4, 0, 0, 0}), std::nullopt};
  for (int rep = 0; rep < 1000; ++rep) {
    const auto child = mutate(ind, 0.5, cfg, rng);
    for (std::size_t i = 0; i < 7; ++i) {
      EXPECT_EQ(child.onsite[i], child.onsite[6 - i]);
      EXPECT_LE(std::abs(child.onsite[i] - ind.onsite[i]), cfg.amplitude_hi);
    }
  }
}

TEST(Genetic, ZeroRateMutationKeepsCachedEvaluation) {
  GAConfig cfg = default_ga_config(3, 3);
  auto rng = make_stream(1);
  const Individual ind = evaluate(Individual{{1.0, 0.0, 1.0}, std::nullopt}, cfg);
  const auto same = mutate(ind, 0.0, cfg, rng);
  EXPECT_EQ(same.onsite, ind.onsite);
  ASSERT_TRUE(same.eval.has_value());
  const auto moved = mutate(ind, 1.0, cfg, rng);
  EXPECT_NE(moved.onsite, ind.onsite);
  EXPECT_FALSE(moved.eval.has_value());
}

TEST(GeneticProperty, CrossoverTakesEachGeneWithProbabilityHalf) {
  const Individual a{std::vector<double>(9, 1.0), std::nullopt};
  const Individual b{std::vector<double>(9, 2.0), std::nullopt};
  auto rng = make_stream(77);
  std::size_t from_second = 0;
  std::size_t genes = 0;
  for (int rep = 0; rep < 10000; ++rep) {
    const auto child = crossover(a, b, rng);
    for (std::size_t i = 0; i < 5; ++i) {
      from_second += child.onsite[i] == 2.0;
      ++genes;
    }
    for (std::size_t i = 0; i < 9; ++i) ASSERT_EQ(child.onsite[i], child.onsite[8 - i]);
  }
  EXPECT_NEAR(static_cast<double>(from_second) / static_cast<double>(genes), 0.5, 0.02);
}

TEST(GeneticProperty, FitnessIsGaugeInvariant) {
  for (std::size_t n : {3u, 4u, 5u, 6u, 8u}) {
    GAConfig cfg = default_ga_config(n, 3);
    cfg.q_target = n % 2 ? QTargetMode::inverse_p : QTargetMode::pinch;
    auto rng = make_stream(5, n);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<double> e(n);
      for (auto& x : e) x = uniform(rng, 0.0, 3.0);
      e = mirror_fold(e);
      const auto base = evaluate_onsite(e, cfg);
      for (double shift : {-7.5, -1.0, 0.3, 2.0, 10.0}) {
        auto shifted = e;
        for (auto& x : shifted) x += shift;
        const auto ev = evaluate_onsite(shifted, cfg);
        EXPECT_LE(std::abs(ev.fitness - base.fitness), 1e-10) << "n=" << n << " shift=" << shift;
      }
    }
  }
}

TEST(Genetic, GaugeFixing) {
  EXPECT_EQ(gauge_fixed({3.0, 1.5, 2.0, 1.5, 3.0}), (std::vector<double>{1.5, 0.0, 0.5, 0.0, 1.5}));
  EXPECT_EQ(gauge_fixed({3.0, 1.5, 2.0, 1.5, 3.0}, Gauge::centre_zero),
            (std::vector<double>{1.0, -0.5, 0.0, -0.5, 1.0}));
  EXPECT_EQ(gauge_fixed({4.0, 1.0, 1.0, 4.0}, Gauge::centre_zero), (std::vector<double>{3.0, 0.0, 0.0, 3.0}));
}

TEST(Genetic, DegenerateSpectrumGetsSentinelPenalty) {
  // Huge central energies cut the chain in two, leaving two end levels
  // that coincide to working precision at the bottom of the spectrum.
  GAConfig cfg = default_ga_config(4, 3);
  const auto ev = evaluate_onsite({0.0, 1e9, 1e9, 0.0}, cfg);
  EXPECT_TRUE(ev.degenerate);
  EXPECT_EQ(ev.upsilon, kDegeneratePenalty);
  EXPECT_LT(ev.fitness, 0.0);
}

TEST(Genetic, TwoSiteChainHasNoPenalty) {
  GAConfig cfg = default_ga_config(2, 3);
  const auto ev = evaluate_onsite({0.0, 0.0}, cfg);
  EXPECT_EQ(ev.upsilon, 0.0);
  EXPECT_NEAR(ev.f_max, 1.0, 1e-9);
  EXPECT_NEAR(ev.fitness, 1.0, 1e-9);
}

TEST(Genetic, RunProducesHistoryAndMonotoneBest) {
  const auto cfg = small_config(3, 3);
  const auto result = run_ga(cfg);
  ASSERT_EQ(result.history.size(), cfg.generations);
  ASSERT_TRUE(result.best.eval.has_value());
  for (std::size_t g = 1; g < result.history.size(); ++g) {
    // One elite survives, so the leader never gets worse.
    EXPECT_GE(result.history[g].best_fitness, result.history[g - 1].best_fitness);
  }
  EXPECT_EQ(result.best.eval->fitness, result.history.back().best_fitness);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(result.best.onsite[i], result.best.onsite[2 - i]);
}

TEST(GeneticProperty, ResultIsIndependentOfThreadCount) {
  for (std::size_t n : {3u, 6u}) {
    const auto cfg = small_config(n, 5);
    const auto one = io::to_json(run_ga(cfg, RunOptions{1})).dump();
    const auto eight = io::to_json(run_ga(cfg, RunOptions{8})).dump();
    EXPECT_EQ(one, eight);
    EXPECT_EQ(one, io::to_json(run_ga(cfg, RunOptions{1})).dump());
  }
  auto other = small_config(3, 5);
  other.seed = 2;
  EXPECT_NE(io::to_json(run_ga(small_config(3, 5))).dump(), io::to_json(run_ga(other)).dump());
}

TEST(Genetic, ThreeSiteSearchFindsAnalyticEnergy) {
  GAConfig cfg = default_ga_config(3, 3);
  cfg.population_size = 128;
  cfg.generations = 80;
  const auto result = run_ga(cfg);
  const auto e = gauge_fixed(result.best.onsite);
  EXPECT_NEAR(e[0], analytic_epsilon_n3(3), 1e-2);
  EXPECT_EQ(e[1], 0.0);
}

TEST(Genetic, RunRejectsInvalidConfig) {
  GAConfig cfg;
  cfg.p = 4;
  EXPECT_THROW(run_ga(cfg), InvalidArgument);
}

}  // namespace
}  // namespace qpst
