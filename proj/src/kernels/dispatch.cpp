#include "vapormem/kernels/phase_accum.hpp"

#include <stdexcept>

namespace vapormem::kernels {

namespace {
bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}
}  // namespace

PhaseAccumFn select_phase_accum(Kernel which) {
    switch (which) {
        case Kernel::scalar:
            return phase_accum_scalar;
        case Kernel::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (cpu_has_avx2_fma()) return phase_accum_avx2;
#endif
            throw std::runtime_error("avx2 kernel requested but not supported on this CPU");
        case Kernel::automatic:
        default:
#if defined(__x86_64__) || defined(_M_X64)
            if (cpu_has_avx2_fma()) return phase_accum_avx2;
#endif
            return phase_accum_scalar;
    }
}

std::string selected_kernel_name(Kernel which) {
    if (which == Kernel::scalar) return "scalar";
    if (which == Kernel::avx2) return "avx2";
    return cpu_has_avx2_fma() ? "avx2" : "scalar";
}

Kernel kernel_from_string(const std::string& name) {
    if (name == "auto" || name.empty()) return Kernel::automatic;
    if (name == "scalar") return Kernel::scalar;
    if (name == "avx2") return Kernel::avx2;
    throw std::invalid_argument("unknown kernel '" + name + "' (expected auto|scalar|avx2)");
}

}  // namespace vapormem::kernels
