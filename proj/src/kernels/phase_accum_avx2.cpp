#include "vapormem/kernels/phase_accum.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "vapormem/kernels/sincos.hpp"

namespace vapormem::kernels {

namespace {

// Vector sincos mirroring sincos_scalar operation for operation.
inline void sincos_pd(__m256d x, __m256d& s, __m256d& c) {
    const __m256d two_over_pi = _mm256_set1_pd(kTwoOverPi);
    const __m128i ki = _mm256_cvtpd_epi32(_mm256_mul_pd(x, two_over_pi));  // nearest-even
    const __m256d k = _mm256_cvtepi32_pd(ki);

    __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kDp1), x);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kDp2), r);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kDp3), r);
    const __m256d z = _mm256_mul_pd(r, r);

    __m256d ps = _mm256_set1_pd(kSin0);
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kSin1));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kSin2));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kSin3));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kSin4));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kSin5));
    const __m256d rz = _mm256_mul_pd(r, z);
    const __m256d sin_r = _mm256_fmadd_pd(rz, ps, r);

    __m256d pc = _mm256_set1_pd(kCos0);
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kCos1));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kCos2));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kCos3));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kCos4));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kCos5));
    const __m256d zz = _mm256_mul_pd(z, z);
    const __m256d half = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, _mm256_set1_pd(1.0));
    const __m256d cos_r = _mm256_fmadd_pd(zz, pc, half);

    // quadrant = ki & 3: swap sin/cos when bit0 set; flip signs as in the
    // scalar switch (sin flips when bit1 set, cos flips when (q+1)&2).
    const __m128i q = _mm_and_si128(ki, _mm_set1_epi32(3));
    const __m128i one = _mm_set1_epi32(1);
    const __m128i swap32 = _mm_cmpeq_epi32(_mm_and_si128(q, one), one);
    const __m256d swap_mask = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(swap32));

    const __m128i two = _mm_set1_epi32(2);
    const __m128i sflip32 = _mm_cmpeq_epi32(_mm_and_si128(q, two), two);
    const __m128i cflip32 =
        _mm_cmpeq_epi32(_mm_and_si128(_mm_add_epi32(q, one), two), two);
    const __m256d sign_bit = _mm256_set1_pd(-0.0);
    const __m256d sflip =
        _mm256_and_pd(_mm256_castsi256_pd(_mm256_cvtepi32_epi64(sflip32)), sign_bit);
    const __m256d cflip =
        _mm256_and_pd(_mm256_castsi256_pd(_mm256_cvtepi32_epi64(cflip32)), sign_bit);

    const __m256d s_base = _mm256_blendv_pd(sin_r, cos_r, swap_mask);
    const __m256d c_base = _mm256_blendv_pd(cos_r, sin_r, swap_mask);
    s = _mm256_xor_pd(s_base, sflip);
    c = _mm256_xor_pd(c_base, cflip);
}

}  // namespace

PhaseMoments phase_accum_avx2(const double* velocities, std::size_t n, double scale) {
    __m256d acc_c = _mm256_setzero_pd();
    __m256d acc_s = _mm256_setzero_pd();
    __m256d acc_cc = _mm256_setzero_pd();
    __m256d acc_ss = _mm256_setzero_pd();
    __m256d acc_cs = _mm256_setzero_pd();
    const __m256d vscale = _mm256_set1_pd(scale);

    const std::size_t n4 = n & ~std::size_t{3};
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d v = _mm256_loadu_pd(velocities + i);
        const __m256d theta = _mm256_mul_pd(vscale, v);
        __m256d s, c;
        sincos_pd(theta, s, c);
        acc_c = _mm256_add_pd(acc_c, c);
        acc_s = _mm256_add_pd(acc_s, s);
        acc_cc = _mm256_fmadd_pd(c, c, acc_cc);
        acc_ss = _mm256_fmadd_pd(s, s, acc_ss);
        acc_cs = _mm256_fmadd_pd(c, s, acc_cs);
    }

    alignas(32) double lc[4], ls[4], lcc[4], lss[4], lcs[4];
    _mm256_store_pd(lc, acc_c);
    _mm256_store_pd(ls, acc_s);
    _mm256_store_pd(lcc, acc_cc);
    _mm256_store_pd(lss, acc_ss);
    _mm256_store_pd(lcs, acc_cs);

    // tail atoms keep their lane assignment (index mod 4)
    for (std::size_t i = n4; i < n; ++i) {
        const std::size_t lane = i & 3;
        const double theta = scale * velocities[i];
        double s, c;
        sincos_scalar(theta, s, c);
        lc[lane] += c;
        ls[lane] += s;
        lcc[lane] = std::fma(c, c, lcc[lane]);
        lss[lane] = std::fma(s, s, lss[lane]);
        lcs[lane] = std::fma(c, s, lcs[lane]);
    }

    PhaseMoments m;
    m.sum_cos = (lc[0] + lc[1]) + (lc[2] + lc[3]);
    m.sum_sin = (ls[0] + ls[1]) + (ls[2] + ls[3]);
    m.sum_cos2 = (lcc[0] + lcc[1]) + (lcc[2] + lcc[3]);
    m.sum_sin2 = (lss[0] + lss[1]) + (lss[2] + lss[3]);
    m.sum_cossin = (lcs[0] + lcs[1]) + (lcs[2] + lcs[3]);
    return m;
}

}  // namespace vapormem::kernels

#endif  // x86_64
