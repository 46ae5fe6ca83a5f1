// AVX2 + FMA variant of the transfer-probability kernel. Four time samples
// per register; sin/cos evaluated with a Cody-Waite reduction by pi/2 and
// the fdlibm minimax polynomials on [-pi/4, pi/4]. Accurate to a few ulp for
// |E t| < 2^20.

#include <immintrin.h>

#include <array>
#include <cstddef>

#include "qpst/kernels.hpp"

namespace qpst::kernels {
namespace {

// pi/2 split into three pieces; the first has 33 significant bits.
constexpr double kPio2Hi = 1.57079632673412561417e+00;
constexpr double kPio2Mid = 6.07710050630396597660e-11;
constexpr double kPio2Lo = 2.02226624871116645580e-21;
constexpr double kTwoOverPi = 6.36619772367581382433e-01;

constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;

constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

inline void sincos4(__m256d x, __m256d& s, __m256d& c) {
  const __m256d j = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(j, _mm256_set1_pd(kPio2Hi), x);
  r = _mm256_fnmadd_pd(j, _mm256_set1_pd(kPio2Mid), r);
  r = _mm256_fnmadd_pd(j, _mm256_set1_pd(kPio2Lo), r);

  const __m256d z = _mm256_mul_pd(r, r);

  __m256d ps = _mm256_fmadd_pd(z, _mm256_set1_pd(kS6), _mm256_set1_pd(kS5));
  ps = _mm256_fmadd_pd(z, ps, _mm256_set1_pd(kS4));
  ps = _mm256_fmadd_pd(z, ps, _mm256_set1_pd(kS3));
  ps = _mm256_fmadd_pd(z, ps, _mm256_set1_pd(kS2));
  ps = _mm256_fmadd_pd(z, ps, _mm256_set1_pd(kS1));
  const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(r, z), ps, r);

  __m256d pc = _mm256_fmadd_pd(z, _mm256_set1_pd(kC6), _mm256_set1_pd(kC5));
  pc = _mm256_fmadd_pd(z, pc, _mm256_set1_pd(kC4));
  pc = _mm256_fmadd_pd(z, pc, _mm256_set1_pd(kC3));
  pc = _mm256_fmadd_pd(z, pc, _mm256_set1_pd(kC2));
  pc = _mm256_fmadd_pd(z, pc, _mm256_set1_pd(kC1));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d cos_r =
      _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc, _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, one));

  // Quadrant bookkeeping in 64-bit integer lanes.
  const __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(j));
  const __m256i bit0 = _mm256_set1_epi64x(1);
  const __m256i bit1 = _mm256_set1_epi64x(2);
  const __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, bit0), bit0));
  const __m256d sin_sign = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_and_si256(q, bit1), 62));
  const __m256d cos_sign =
      _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_and_si256(_mm256_add_epi64(q, bit0), bit1), 62));

  s = _mm256_xor_pd(_mm256_blendv_pd(sin_r, cos_r, swap), sin_sign);
  c = _mm256_xor_pd(_mm256_blendv_pd(cos_r, sin_r, swap), cos_sign);
}

inline __m256d probability4(const double* energies, const double* weights, std::size_t modes, __m256d t) {
  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();
  for (std::size_t n = 0; n < modes; ++n) {
    const __m256d phase = _mm256_mul_pd(_mm256_set1_pd(energies[n]), t);
    __m256d s;
    __m256d c;
    sincos4(phase, s, c);
    const __m256d w = _mm256_set1_pd(weights[n]);
    re = _mm256_fmadd_pd(w, c, re);
    im = _mm256_fmadd_pd(w, s, im);
  }
  return _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im));
}

}  // namespace

void transfer_probability_grid_avx2(std::span<const double> energies, std::span<const double> weights, double t0,
                                    double dt, std::span<double> out) {
  const std::size_t modes = energies.size();
  const __m256d t0v = _mm256_set1_pd(t0);
  const __m256d dtv = _mm256_set1_pd(dt);
  const __m256d lane = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);

  std::size_t k = 0;
  for (; k + 4 <= out.size(); k += 4) {
    const __m256d idx = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(k)), lane);
    const __m256d t = _mm256_add_pd(t0v, _mm256_mul_pd(idx, dtv));
    _mm256_storeu_pd(out.data() + k, probability4(energies.data(), weights.data(), modes, t));
  }
  if (k < out.size()) {
    const __m256d idx = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(k)), lane);
    const __m256d t = _mm256_add_pd(t0v, _mm256_mul_pd(idx, dtv));
    alignas(32) std::array<double, 4> tail{};
    _mm256_store_pd(tail.data(), probability4(energies.data(), weights.data(), modes, t));
    for (std::size_t i = 0; k < out.size(); ++k, ++i) out[k] = tail[i];
  }
}

}  // namespace qpst::kernels
