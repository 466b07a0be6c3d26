#pragma once

#include <cstdint>
#include <vector>

#include "vapormem/kernels/phase_accum.hpp"
#include "vapormem/spinwave.hpp"
#include "vapormem/vapor.hpp"

// Monte-Carlo motional dephasing: sample 1-D velocity classes, evolve per-atom
// spinwave phases e^{i(dk*v + 2*pi*f_j) t}, ensemble-average. Serves as the
// independent oracle for the analytic Gaussian decay and the beating factor.

namespace vapormem {

struct McComponent {
    double amplitude;
    double splitting_offset_mhz;
};

struct McConfig {
    std::uint64_t n_atoms = 100000;
    std::uint64_t seed = 1;
    VaporConditions vapor;
    SpinwaveGeometry geometry;
    std::vector<double> times_ns;                   // non-negative, strictly increasing
    std::vector<McComponent> components = {{1.0, 0.0}};
    int n_workers = 1;
    kernels::Kernel kernel = kernels::Kernel::automatic;

    void validate() const;
};

struct McPoint {
    double t_ns;
    double efficiency;
    double stderr_;
};

// Deterministic for fixed (seed, config) and independent of n_workers and of
// the scalar/AVX2 kernel choice (bit-identical by construction). Efficiency is
// |ensemble mean|^2 normalized to its t=0 value; stderr by the delta method.
std::vector<McPoint> simulate_decay(const McConfig& cfg);

struct DeviationReport {
    double max_abs = 0.0;
    double rms = 0.0;
    std::size_t n = 0;
};

// Pointwise and RMS deviation between the normalized MC curve and the
// normalized analytic model (beating factor squared times Gaussian envelope).
// Grids must match exactly.
DeviationReport compare_to_model(const std::vector<McPoint>& mc,
                                 const SpinwaveModelParams& p,
                                 const HyperfineSplittings& hf);

// Same report for two sampled curves; throws on time-grid mismatch.
DeviationReport compare_curves(const std::vector<McPoint>& a, const std::vector<McPoint>& b);

// |dk| in rad/m for the configured geometry (throws on Doppler-free).
double wavevector_mismatch_rad_per_m(const SpinwaveGeometry& geom);

}  // namespace vapormem
