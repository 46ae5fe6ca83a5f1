#include "qpst/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "qpst/errors.hpp"
#include "qpst/kernels.hpp"

namespace qpst {
namespace {

void check_site(const EigenSystem& eig, Site s) {
  if (s.number < 1 || s.number > eig.size()) {
    throw InvalidArgument("site " + std::to_string(s.number) + " outside 1.." + std::to_string(eig.size()));
  }
}

double probability(const std::vector<double>& energies, const std::vector<double>& weights, double t) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t n = 0; n < energies.size(); ++n) {
    re += weights[n] * std::cos(energies[n] * t);
    im += weights[n] * std::sin(energies[n] * t);
  }
  return re * re + im * im;
}

// Maximises f on [a, b] starting from the interior guess x (Brent, 1973).
Peak brent_maximize(const std::function<double(double)>& f, double a, double b, double x) {
  constexpr double kGolden = 0.3819660112501051;
  constexpr double kTol = 2.5e-7;  // stops once b - a <= 4 * kTol
  constexpr int kMaxIter = 200;

  double w = x;
  double v = x;
  double fx = -f(x);
  double fw = fx;
  double fv = fx;
  double d = 0.0;
  double e = 0.0;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    const double xm = 0.5 * (a + b);
    const double tol2 = 2.0 * kTol;
    if (std::abs(x - xm) <= tol2 - 0.5 * (b - a)) break;
    bool golden = true;
    if (std::abs(e) > kTol) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double etemp = e;
      e = d;
      if (!(std::abs(p) >= std::abs(0.5 * q * etemp) || p <= q * (a - x) || p >= q * (b - x))) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = std::copysign(kTol, xm - x);
        golden = false;
      }
    }
    if (golden) {
      e = (x >= xm) ? a - x : b - x;
      d = kGolden * e;
    }
    const double u = std::abs(d) >= kTol ? x + d : x + std::copysign(kTol, d);
    const double fu = -f(u);
    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return {x, -fx};
}

// Refines the best of `samples` (taken at k * dt) with the exact spectral sum.
Peak refine_peak(const std::vector<double>& energies, const std::vector<double>& weights,
                 const std::vector<double>& samples, double dt) {
  const auto best = std::max_element(samples.begin(), samples.end());
  const std::size_t k = static_cast<std::size_t>(best - samples.begin());
  const double t_best = static_cast<double>(k) * dt;
  Peak coarse{t_best, probability(energies, weights, t_best)};

  const double lo = k == 0 ? 0.0 : static_cast<double>(k - 1) * dt;
  const double hi = k + 1 == samples.size() ? t_best : static_cast<double>(k + 1) * dt;
  if (hi <= lo) return coarse;
  auto f = [&](double t) { return probability(energies, weights, t); };
  const Peak refined = brent_maximize(f, lo, hi, t_best);
  return refined.fidelity >= coarse.fidelity ? refined : coarse;
}

}  // namespace

std::vector<double> transfer_weights(const EigenSystem& eig, Site source, Site target) {
  check_site(eig, source);
  check_site(eig, target);
  std::vector<double> w(eig.size());
  for (std::size_t n = 0; n < eig.size(); ++n) {
    w[n] = eig.component(target.number - 1, n) * eig.component(source.number - 1, n);
  }
  return w;
}

double fidelity_at(const EigenSystem& eig, double t, Site source, Site target) {
  if (!(t >= 0.0)) throw InvalidArgument("time must be non-negative");
  return probability(eig.values, transfer_weights(eig, source, target), t);
}

Peak max_fidelity(const EigenSystem& eig, Site source, Site target, double t_max, std::size_t grid) {
  if (!(t_max > 0.0)) throw InvalidArgument("t_max must be positive");
  if (grid < 2) throw InvalidArgument("peak grid needs at least 2 points");
  const auto w = transfer_weights(eig, source, target);
  const double dt = t_max / static_cast<double>(grid - 1);
  std::vector<double> samples(grid);
  kernels::transfer_probability_grid(eig.values, w, 0.0, dt, samples);
  return refine_peak(eig.values, w, samples, dt);
}

FidelityTrace trace(const EigenSystem& eig, Site source, Site target, double t_max, std::size_t steps) {
  if (!(t_max > 0.0)) throw InvalidArgument("t_max must be positive");
  if (steps < 2) throw InvalidArgument("trace needs at least 2 steps");
  const auto w_target = transfer_weights(eig, source, target);
  const auto w_initial = transfer_weights(eig, source, source);
  const double dt = t_max / static_cast<double>(steps - 1);

  FidelityTrace tr;
  tr.times.resize(steps);
  for (std::size_t k = 0; k < steps; ++k) tr.times[k] = static_cast<double>(k) * dt;
  tr.times.back() = t_max;
  tr.to_target.resize(steps);
  tr.to_initial.resize(steps);
  kernels::transfer_probability_grid(eig.values, w_target, 0.0, dt, tr.to_target);
  kernels::transfer_probability_grid(eig.values, w_initial, 0.0, dt, tr.to_initial);
  tr.peak = refine_peak(eig.values, w_target, tr.to_target, dt);
  return tr;
}

std::size_t count_attempts(const FidelityTrace& tr, double threshold) {
  const auto& f = tr.to_target;
  std::size_t count = 0;
  for (std::size_t k = 1; k + 1 < f.size(); ++k) {
    if (f[k] >= threshold) break;
    if (f[k] > f[k - 1] && f[k] >= f[k + 1] && f[k + 1] < threshold) ++count;
  }
  return count;
}

double predicted_mirror_time(double alpha, int p) {
  require_odd_p(p);
  if (!(alpha > 0.0)) throw InvalidArgument("alpha must be positive");
  return static_cast<double>(p) * std::numbers::pi / (2.0 * alpha);
}

int attempts(int p) {
  require_odd_p(p);
  return (p - 1) / 2;
}

}  // namespace qpst
