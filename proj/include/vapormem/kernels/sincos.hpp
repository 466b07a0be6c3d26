#pragma once

#include <cmath>
#include <cstdint>

// Polynomial sincos shared by the scalar and SIMD phase-accumulation kernels.
// Both variants execute the same operation sequence (explicit fma, nearest-even
// rounding), so their per-element results are bit-identical. Cephes-style
// minimax coefficients; Cody-Waite three-part pi/2 reduction. Accurate to a
// few 1e-15 absolute for |x| up to ~1e4, which the equivalence and accuracy
// tests pin down.

namespace vapormem::kernels {

inline constexpr double kTwoOverPi = 0.63661977236758134308;
inline constexpr double kDp1 = 7.85398125648498535156e-1;
inline constexpr double kDp2 = 3.77489470793079817668e-8;
inline constexpr double kDp3 = 2.69515142907905952645e-15;

inline constexpr double kSin0 = 1.58962301576546568060e-10;
inline constexpr double kSin1 = -2.50507477628578072866e-8;
inline constexpr double kSin2 = 2.75573136213857245213e-6;
inline constexpr double kSin3 = -1.98412698295895385996e-4;
inline constexpr double kSin4 = 8.33333333332211858878e-3;
inline constexpr double kSin5 = -1.66666666666666307295e-1;

inline constexpr double kCos0 = -1.13585365213876817300e-11;
inline constexpr double kCos1 = 2.08757008419747316778e-9;
inline constexpr double kCos2 = -2.75573141792967388112e-7;
inline constexpr double kCos3 = 2.48015872888517179954e-5;
inline constexpr double kCos4 = -1.38888888888730564116e-3;
inline constexpr double kCos5 = 4.16666666666665929218e-2;

inline void sincos_scalar(double x, double& s, double& c) {
    // nearest-even, matching _mm256_cvtpd_epi32 in the AVX2 path
    const std::int32_t ki = static_cast<std::int32_t>(std::lrint(x * kTwoOverPi));
    const double k = static_cast<double>(ki);
    double r = std::fma(-k, kDp1, x);
    r = std::fma(-k, kDp2, r);
    r = std::fma(-k, kDp3, r);
    const double z = r * r;

    double ps = kSin0;
    ps = std::fma(ps, z, kSin1);
    ps = std::fma(ps, z, kSin2);
    ps = std::fma(ps, z, kSin3);
    ps = std::fma(ps, z, kSin4);
    ps = std::fma(ps, z, kSin5);
    const double rz = r * z;
    const double sin_r = std::fma(rz, ps, r);

    double pc = kCos0;
    pc = std::fma(pc, z, kCos1);
    pc = std::fma(pc, z, kCos2);
    pc = std::fma(pc, z, kCos3);
    pc = std::fma(pc, z, kCos4);
    pc = std::fma(pc, z, kCos5);
    const double zz = z * z;
    const double cos_r = std::fma(zz, pc, std::fma(-0.5, z, 1.0));

    switch (ki & 3) {
        case 0: s = sin_r; c = cos_r; break;
        case 1: s = cos_r; c = -sin_r; break;
        case 2: s = -sin_r; c = -cos_r; break;
        default: s = -cos_r; c = sin_r; break;
    }
}

}  // namespace vapormem::kernels
