#include "qpst/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qpst/errors.hpp"

namespace qpst {
namespace {

constexpr double kParityFloor = 1e-12;

// Wraps an angle into (-pi, pi].
double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::remainder(a, two_pi);
  return a;
}

}  // namespace

double inverse_p_target(int p) {
  require_odd_p(p);
  return 1.0 / static_cast<double>(p);
}

double pinch_q_target(std::size_t n, int p) {
  require_odd_p(p);
  if (n < 3) throw InvalidArgument("Q-factor needs at least 3 levels");
  return std::pow(1.0 / static_cast<double>(p), static_cast<double>(n - 2));
}

SpectralReport spectral_report(std::span<const double> eigenvalues, int p) {
  return spectral_report(eigenvalues, p, inverse_p_target(p));
}

SpectralReport spectral_report(std::span<const double> eigenvalues, int p, double q_target) {
  require_odd_p(p);
  const std::size_t n = eigenvalues.size();
  if (n < 3) throw InvalidArgument("spectral report needs at least 3 eigenvalues");
  if (!std::is_sorted(eigenvalues.begin(), eigenvalues.end())) {
    throw InvalidArgument("eigenvalues must be ascending");
  }

  SpectralReport r;
  r.p = p;
  r.q_target = q_target;
  r.spacings.resize(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) r.spacings[k] = eigenvalues[k + 1] - eigenvalues[k];
  r.top_gap = r.spacings.back();

  const std::size_t body = n - 2;
  const double scale = std::max(1.0, eigenvalues.back() - eigenvalues.front());
  double sum = 0.0;
  double product = 1.0;
  for (std::size_t k = 0; k < body; ++k) {
    // Spacings at rounding level count as zero.
    if (r.spacings[k] <= 1e-14 * scale) {
      throw DegenerateSpectrum("body spacing " + std::to_string(k + 1) + " is zero");
    }
    sum += r.spacings[k];
    product *= r.spacings[k];
  }
  r.body_mean = sum / static_cast<double>(body);
  double var = 0.0;
  for (std::size_t k = 0; k < body; ++k) {
    const double dev = r.spacings[k] - r.body_mean;
    var += dev * dev;
  }
  r.sigma_body = std::sqrt(var / static_cast<double>(body));
  r.pinch_ratio = r.top_gap / r.body_mean;
  r.q_factor = std::pow(r.top_gap, static_cast<double>(body)) / product;
  r.penalty = std::abs(r.q_factor - q_target) + r.sigma_body;
  return r;
}

std::vector<double> pinch_spectrum(std::size_t n, double alpha, int p) {
  require_odd_p(p);
  if (n < 2) throw InvalidArgument("pinch spectrum needs at least 2 levels");
  if (!(alpha > 0.0)) throw InvalidArgument("alpha must be positive");
  std::vector<double> e(n);
  const double base = 1.0 - static_cast<double>(n);
  for (std::size_t k = 1; k < n; ++k) {
    e[k - 1] = alpha * (base + 2.0 * static_cast<double>(k - 1));
  }
  e[n - 1] = e[n - 2] + 2.0 * alpha / static_cast<double>(p);
  return e;
}

std::vector<int> eigenvector_parities(const EigenSystem& eig) {
  const std::size_t n = eig.size();
  std::vector<int> parity(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double first = eig.component(0, k);
    const double last = eig.component(n - 1, k);
    if (std::abs(first) < kParityFloor && std::abs(last) < kParityFloor) {
      throw ParityUndetermined("eigenvector " + std::to_string(k + 1) + " vanishes at both chain ends");
    }
    parity[k] = first * last >= 0.0 ? 1 : -1;
  }
  return parity;
}

std::vector<int> alternating_parities(std::size_t n) {
  std::vector<int> parity(n);
  for (std::size_t k = 0; k < n; ++k) parity[k] = ((n - 1 - k) % 2 == 0) ? 1 : -1;
  return parity;
}

bool verify_mirror_phases(std::span<const double> eigenvalues, double t_m, std::span<const int> parities,
                          double tol) {
  if (eigenvalues.size() != parities.size()) throw InvalidArgument("one parity per eigenvalue required");
  if (eigenvalues.empty()) return true;
  for (int s : parities)
    if (s != 1 && s != -1) throw InvalidArgument("parities must be +1 or -1");
  // Phase of exp(-i E_n t) * parity_n relative to level 1.
  auto phase = [&](std::size_t k) {
    const double flip = parities[k] < 0 ? std::numbers::pi : 0.0;
    return -eigenvalues[k] * t_m - flip;
  };
  const double reference = phase(0);
  for (std::size_t k = 1; k < eigenvalues.size(); ++k) {
    if (std::abs(wrap_angle(phase(k) - reference)) > tol) return false;
  }
  return true;
}

bool gaps_are_odd_multiples(std::span<const double> eigenvalues, double t_m, double tol) {
  for (std::size_t k = 0; k + 1 < eigenvalues.size(); ++k) {
    const double ratio = (eigenvalues[k + 1] - eigenvalues[k]) * t_m / std::numbers::pi;
    const double nearest_odd = 2.0 * std::round((ratio - 1.0) / 2.0) + 1.0;
    if (std::abs(ratio - nearest_odd) > tol) return false;
  }
  return true;
}

double analytic_epsilon_n3(int p) {
  require_odd_p(p);
  const double pd = static_cast<double>(p);
  return std::sqrt(2.0 / pd) * (pd - 1.0);
}

std::array<double, 3> n3_eigenvalues(double epsilon) {
  const double root = std::sqrt(epsilon * epsilon + 8.0);
  std::array<double, 3> e{epsilon, 0.5 * epsilon + 0.5 * root, 0.5 * epsilon - 0.5 * root};
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace qpst
