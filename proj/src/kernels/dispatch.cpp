#include <atomic>
#include <cstdlib>
#include <string>

#include "qpst/errors.hpp"
#include "qpst/kernels.hpp"

namespace qpst::kernels {
namespace {

constexpr int kUnset = -1;
std::atomic<int> g_forced{kUnset};

Isa default_isa() {
  if (const char* env = std::getenv("QPST_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
  }
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(QPST_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa fallback = default_isa();
  const int forced = g_forced.load(std::memory_order_relaxed);
  return forced == kUnset ? fallback : static_cast<Isa>(forced);
}

void force_isa(std::optional<Isa> isa) {
  if (!isa) {
    g_forced.store(kUnset);
    return;
  }
  if (!isa_available(*isa)) {
    throw InvalidArgument("instruction set not available: " + std::string(isa_name(*isa)));
  }
  g_forced.store(static_cast<int>(*isa));
}

void transfer_probability_grid(std::span<const double> energies, std::span<const double> weights, double t0,
                               double dt, std::span<double> out) {
  if (energies.size() != weights.size()) throw InvalidArgument("energies and weights differ in length");
#if defined(QPST_WITH_AVX2)
  if (active_isa() == Isa::avx2) {
    transfer_probability_grid_avx2(energies, weights, t0, dt, out);
    return;
  }
#endif
  transfer_probability_grid_scalar(energies, weights, t0, dt, out);
}

}  // namespace qpst::kernels
