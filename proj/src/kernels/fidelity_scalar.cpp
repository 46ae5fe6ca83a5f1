#include <cmath>
#include <cstddef>

#include "qpst/kernels.hpp"

namespace qpst::kernels {

void transfer_probability_grid_scalar(std::span<const double> energies, std::span<const double> weights, double t0,
                                      double dt, std::span<double> out) {
  const std::size_t modes = energies.size();
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double t = t0 + static_cast<double>(k) * dt;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t n = 0; n < modes; ++n) {
      const double phase = energies[n] * t;
      re += weights[n] * std::cos(phase);
      im += weights[n] * std::sin(phase);
    }
    out[k] = re * re + im * im;
  }
}

}  // namespace qpst::kernels
