#pragma once

#include <cstddef>
#include <vector>

#include "qpst/eigensystem.hpp"

namespace qpst {

// 1-based position along the chain; site 1 is the first matrix row.
struct Site {
  std::size_t number = 1;
};

constexpr double kDefaultTimeWindow = 30.0;
constexpr std::size_t kDefaultPeakGrid = 4000;

struct Peak {
  double time = 0.0;
  double fidelity = 0.0;
};

// Sampled fidelity curves on a uniform time grid starting at 0.
struct FidelityTrace {
  std::vector<double> times;
  std::vector<double> to_target;
  std::vector<double> to_initial;
  Peak peak;  // refined maximum of to_target
};

// w_n = V[target, n] * V[source, n]; the transfer amplitude is
// sum_n w_n exp(-i E_n t).
std::vector<double> transfer_weights(const EigenSystem& eig, Site source, Site target);

// |<target| exp(-iHt) |source>|^2 evaluated from the spectral sum.
double fidelity_at(const EigenSystem& eig, double t, Site source, Site target);

// Coarse scan of `grid` equally spaced samples on [0, t_max], then Brent
// refinement around the best sample until the bracket is below 1e-6.
Peak max_fidelity(const EigenSystem& eig, Site source, Site target, double t_max = kDefaultTimeWindow,
                  std::size_t grid = kDefaultPeakGrid);

// `steps` samples on [0, t_max] of the fidelity with the target and with the
// initial state.
FidelityTrace trace(const EigenSystem& eig, Site source, Site target, double t_max, std::size_t steps);

// Local maxima of to_target that stay below `threshold` and occur before the
// first sample reaching it.
std::size_t count_attempts(const FidelityTrace& tr, double threshold = 0.999);

// p * pi / (2 alpha).
double predicted_mirror_time(double alpha, int p);

// (p - 1) / 2 sub-unity maxima precede the first mirroring.
int attempts(int p);

}  // namespace qpst
