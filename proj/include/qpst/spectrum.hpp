#pragma once

#include <array>
#include <span>
#include <vector>

#include "qpst/eigensystem.hpp"

namespace qpst {

// Spacing statistics of an ascending spectrum relative to a pinched target.
//
// The body is every spacing except the top one (d_1 .. d_{N-2}); the top gap
// d' = d_{N-1} is the pinch. The Q-factor is d'^{N-2} / prod(body) and the
// penalty is |Q - q_target| + sigma_body with a population standard
// deviation. q_target defaults to 1/p; for N > 3 an ideal pinch has
// Q = (1/p)^{N-2}, see pinch_q_target().
struct SpectralReport {
  std::vector<double> spacings;
  double top_gap = 0.0;
  double body_mean = 0.0;
  double pinch_ratio = 0.0;
  double q_factor = 0.0;
  double q_target = 0.0;
  double sigma_body = 0.0;
  double penalty = 0.0;
  int p = 1;
};

// Throws InvalidArgument for N < 3, unsorted input or bad p, and
// DegenerateSpectrum when a body spacing vanishes.
SpectralReport spectral_report(std::span<const double> eigenvalues, int p);
SpectralReport spectral_report(std::span<const double> eigenvalues, int p, double q_target);

// 1/p.
double inverse_p_target(int p);
// (1/p)^{N-2}: the Q-factor of pinch_spectrum(n, alpha, p).
double pinch_q_target(std::size_t n, int p);

// E_k = alpha (1 - n + 2 (k - 1)) for k < n and E_n = E_{n-1} + 2 alpha / p.
std::vector<double> pinch_spectrum(std::size_t n, double alpha, int p);

// Mirror parity (+1 even, -1 odd) of each eigenvector, read from the
// relative sign of its first and last components. Throws
// ParityUndetermined if both are below 1e-12 in magnitude.
std::vector<int> eigenvector_parities(const EigenSystem& eig);

// Parities expected for a tridiagonal chain with positive couplings: the
// highest level is even and they alternate downwards.
std::vector<int> alternating_parities(std::size_t n);

constexpr double kPhaseTolerance = 1e-8;

// True iff exp(-i E_n t_m) = g * parity_n for one global phase g, i.e. the
// evolution at t_m acts as the mirror operator.
bool verify_mirror_phases(std::span<const double> eigenvalues, double t_m, std::span<const int> parities,
                          double tol = kPhaseTolerance);

// Every consecutive gap times t_m / pi is an odd integer within tol.
bool gaps_are_odd_multiples(std::span<const double> eigenvalues, double t_m, double tol = kPhaseTolerance);

// Outer on-site energy of the N = 3 chain (eps, 0, eps) whose top spacing is
// 1/p of the bottom one: sqrt(2/p) (p - 1).
double analytic_epsilon_n3(int p);

// Spectrum of the N = 3 chain (eps, 0, eps) with unit couplings, ascending.
std::array<double, 3> n3_eigenvalues(double epsilon);

}  // namespace qpst
