#pragma once

#include <cstddef>
#include <string>

// Hot loop of the Monte-Carlo dephasing simulator: for per-atom velocities v_i
// accumulate the first and second moments of (cos(scale*v_i), sin(scale*v_i)).
// Scalar reference and AVX2 variant follow the same fixed four-lane blocked
// reduction (lane = atom index mod 4, lanes combined as (l0+l1)+(l2+l3)) and
// the same polynomial sincos, so their results are bit-identical; the
// equivalence tests assert exact equality.

namespace vapormem::kernels {

struct PhaseMoments {
    double sum_cos = 0.0;
    double sum_sin = 0.0;
    double sum_cos2 = 0.0;
    double sum_sin2 = 0.0;
    double sum_cossin = 0.0;
};

using PhaseAccumFn = PhaseMoments (*)(const double* velocities, std::size_t n, double scale);

PhaseMoments phase_accum_scalar(const double* velocities, std::size_t n, double scale);
#if defined(__x86_64__) || defined(_M_X64)
PhaseMoments phase_accum_avx2(const double* velocities, std::size_t n, double scale);
#endif

enum class Kernel { automatic, scalar, avx2 };

// Runtime selection; `automatic` picks AVX2+FMA when the CPU supports it.
// Throws std::runtime_error when a forced kernel is unavailable.
PhaseAccumFn select_phase_accum(Kernel which);

// Name of the kernel `automatic` resolves to, for manifests and logs.
std::string selected_kernel_name(Kernel which);

Kernel kernel_from_string(const std::string& name);

}  // namespace vapormem::kernels
