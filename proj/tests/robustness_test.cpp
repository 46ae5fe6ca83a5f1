#include "qpst/robustness.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qpst/errors.hpp"

namespace qpst {
namespace {

const ChainSpec kSixSite = uniform_chain(6, {0.958648657062, 0.392015032956, 0.0, 0.0, 0.392015032956, 0.958648657062});

TEST(Rounding, CascadeFromFourFigures) {
  EXPECT_DOUBLE_EQ(round_sig_figs(1.452, 4), 1.452);
  EXPECT_DOUBLE_EQ(round_sig_figs(1.452, 3), 1.45);
  EXPECT_DOUBLE_EQ(round_sig_figs(1.452, 2), 1.5);
  EXPECT_DOUBLE_EQ(round_sig_figs(1.452, 1), 2.0);
  // One-step rounding would give 1 here.
  EXPECT_DOUBLE_EQ(round_sig_figs_once(1.452, 1), 1.0);
}

TEST(Rounding, SignsZerosAndMagnitudes) {
  EXPECT_EQ(round_sig_figs(0.0, 1), 0.0);
  EXPECT_DOUBLE_EQ(round_sig_figs(-1.452, 1), -2.0);
  EXPECT_DOUBLE_EQ(round_sig_figs(0.0392015, 2), 0.039);
  EXPECT_DOUBLE_EQ(round_sig_figs(958.648657, 3), 959.0);
  EXPECT_DOUBLE_EQ(round_sig_figs(0.25, 1), 0.3);
  EXPECT_DOUBLE_EQ(round_sig_figs(0.958648657062, 1), 1.0);
  EXPECT_DOUBLE_EQ(round_sig_figs(0.392015032956, 1), 0.4);
  EXPECT_DOUBLE_EQ(round_sig_figs(123456.0, 6), 123456.0);
  EXPECT_THROW(round_sig_figs(1.0, 0), InvalidArgument);
}

TEST(Rounding, RoundedFidelityStaysAboveClassicalBound) {
  for (int s = 4; s >= 1; --s) {
    const auto peak = rounded_fidelity(kSixSite, s);
    EXPECT_GE(peak.fidelity, 2.0 / 3.0) << s;
  }
  EXPECT_EQ(round_onsite(kSixSite.onsite, 1), (std::vector<double>{1.0, 0.4, 0.0, 0.0, 0.4, 1.0}));
}

TEST(Perturb, BoundedAndSeeded) {
  auto a = make_stream(3, 1);
  auto b = make_stream(3, 1);
  const auto pa = perturb(kSixSite, 0.1, a);
  const auto pb = perturb(kSixSite, 0.1, b);
  EXPECT_EQ(pa.onsite, pb.onsite);
  EXPECT_EQ(pa.couplings, kSixSite.couplings);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_LE(std::abs(pa.onsite[i] - kSixSite.onsite[i]), 0.05 + 1e-15);
  EXPECT_NE(pa.onsite, kSixSite.onsite);

  auto c = make_stream(3, 1);
  EXPECT_EQ(perturb(kSixSite, 0.0, c).onsite, kSixSite.onsite);
  EXPECT_THROW(perturb(kSixSite, -0.1, c), InvalidArgument);
}

TEST(Perturb, ScalesWithLargestCoupling) {
  auto spec = christandl_chain(5, 1.0, false);
  auto a = make_stream(8);
  auto b = make_stream(8);
  const auto wide = perturb(spec, 0.1, a);
  const auto unit = perturb(christandl_chain(5, 1.0, true), 0.1, b);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(wide.onsite[i], unit.onsite[i] * spec.j_max, 1e-14);
}

TEST(MonteCarlo, ZeroDisorderHasZeroSpread) {
  const auto mc = monte_carlo(kSixSite, 0.0, 20, 30.0, 1);
  EXPECT_EQ(mc.stddev_f_max, 0.0);
  EXPECT_EQ(mc.stderr_f_max, 0.0);
  const auto eig = diagonalize(build_hamiltonian(kSixSite));
  EXPECT_NEAR(mc.mean_f_max, max_fidelity(eig, Site{1}, Site{6}).fidelity, 1e-15);
  for (double s : mc.std_trace) EXPECT_EQ(s, 0.0);
}

TEST(MonteCarlo, MeanTraceMatchesFreshAverage) {
  MonteCarloOptions opts;
  opts.trace_steps = 301;
  const auto mc = monte_carlo(kSixSite, 0.1, 40, 15.0, 4, opts);
  std::vector<double> mean(opts.trace_steps, 0.0);
  double mean_peak = 0.0;
  for (std::size_t k = 0; k < 40; ++k) {
    auto rng = make_stream(4, k);
    const auto eig = diagonalize(build_hamiltonian(perturb(kSixSite, 0.1, rng)));
    const auto tr = trace(eig, Site{1}, Site{6}, 15.0, opts.trace_steps);
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += tr.to_target[i] / 40.0;
    mean_peak += max_fidelity(eig, Site{1}, Site{6}, 15.0).fidelity / 40.0;
  }
  for (std::size_t i = 0; i < mean.size(); ++i) EXPECT_NEAR(mc.mean_trace[i], mean[i], 1e-12);
  EXPECT_NEAR(mc.mean_f_max, mean_peak, 1e-12);
  EXPECT_GE(mc.stddev_f_max, 0.0);
  EXPECT_NEAR(mc.stderr_f_max, mc.stddev_f_max / std::sqrt(40.0), 1e-15);
}

TEST(MonteCarlo, IndependentOfThreadCount) {
  MonteCarloOptions one;
  one.trace_steps = 201;
  MonteCarloOptions four = one;
  four.threads = 4;
  const auto a = monte_carlo(kSixSite, 0.2, 300, 20.0, 9, one);
  const auto b = monte_carlo(kSixSite, 0.2, 300, 20.0, 9, four);
  EXPECT_EQ(a.mean_f_max, b.mean_f_max);
  EXPECT_EQ(a.stddev_f_max, b.stddev_f_max);
  EXPECT_EQ(a.mean_trace, b.mean_trace);
  EXPECT_EQ(a.std_trace, b.std_trace);
}

TEST(MonteCarlo, RejectsBadArguments) {
  EXPECT_THROW(monte_carlo(kSixSite, 0.1, 0, 30.0, 1), InvalidArgument);
  EXPECT_THROW(monte_carlo(kSixSite, -0.1, 10, 30.0, 1), InvalidArgument);
}

TEST(Robustness, ReportCollectsEverything) {
  MonteCarloOptions opts;
  opts.trace_steps = 101;
  const auto rep = robustness_report(kSixSite, {4, 3, 2, 1}, {0.05}, 10, 30.0, 2, opts);
  ASSERT_EQ(rep.rounding.size(), 4u);
  ASSERT_EQ(rep.monte_carlo.size(), 1u);
  EXPECT_EQ(rep.rounding[3].sig_figs, 1);
  EXPECT_NEAR(rep.base.fidelity, 0.99698, 1e-5);
  EXPECT_EQ(rep.monte_carlo[0].samples, 10u);
}

}  // namespace
}  // namespace qpst
