#pragma once

// Data-parallel inner loops of the simulator. Every kernel has a scalar
// reference implementation and, where the build and the CPU allow it, a
// vector variant. The public entry points dispatch at runtime.

#include <optional>
#include <span>
#include <string_view>

namespace qpst::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);

// The variant used by the dispatching entry points. Defaults to the widest
// available one; the QPST_ISA environment variable ("scalar", "avx2")
// overrides it at first use.
Isa active_isa();

// Pins the dispatch target (std::nullopt restores the default). Throws
// qpst::InvalidArgument if the requested variant is unavailable.
void force_isa(std::optional<Isa> isa);

// out[k] = |sum_n w_n exp(-i E_n t_k)|^2 for t_k = t0 + k * dt.
void transfer_probability_grid(std::span<const double> energies, std::span<const double> weights, double t0,
                               double dt, std::span<double> out);

void transfer_probability_grid_scalar(std::span<const double> energies, std::span<const double> weights, double t0,
                                      double dt, std::span<double> out);
#if defined(QPST_WITH_AVX2)
void transfer_probability_grid_avx2(std::span<const double> energies, std::span<const double> weights, double t0,
                                    double dt, std::span<double> out);
#endif

}  // namespace qpst::kernels
