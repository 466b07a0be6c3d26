#pragma once

#include <optional>

// Spinwave quantities of the two-photon ladder memory and the closed-form
// retrieval-efficiency model: a secular envelope (exponential + Gaussian decay)
// times a hyperfine beating factor.

namespace vapormem {

enum class Propagation { counter, co };

struct SpinwaveGeometry {
    double signal_wavelength_m;   // vacuum
    double control_wavelength_m;  // vacuum
    Propagation propagation = Propagation::counter;

    void validate() const;
};

struct SpinwaveWavelength {
    double microns;     // +inf when doppler_free
    bool doppler_free;  // counter-propagating with zero wavevector mismatch
};

// lambda_spin = 2*pi/|dk| with |dk| = 2*pi*|1/ls - 1/lc| (counter) or
// 2*pi*(1/ls + 1/lc) (co).
SpinwaveWavelength spinwave_wavelength(const SpinwaveGeometry& geom);

// T_inhom = lambda_s / (sqrt(2) * pi * v_th), in ns. v_th = 0 gives +inf.
double inhomogeneous_dephasing_time_ns(double lambda_spin_um, double v_th_m_per_s);

// Hyperfine splittings of the storage manifold as ordinary frequencies in MHz.
// The angular 2*pi factor (and the ns/MHz 1e-3) is applied only inside the
// beating factor.
struct HyperfineSplittings {
    double f23_mhz;
    double f34_mhz;
    double f45_mhz;

    void validate() const;
};

struct SpinwaveModelParams {
    double eta0;        // in [0, 1]
    double tau_s_ns;    // > 0
    double tau_bar_ns;  // > 0
    double t0_ns;
    double a;
    double b;
    double c;
    double d;  // real beating amplitudes; 1+a+b+c+d must not vanish

    void validate() const;
};

// eta(t) = eta0 * exp(-[ (t-t0-tau_s)(t-t0+tau_bar)/(tau_s*tau_bar) + 1 ])
//        * |1 + A e^{-i w23 dt} + B e^{-i w34 dt} + C e^{-i w45 dt}
//             + D e^{-i (w23+w34) dt}|^2 / (1+A+B+C+D)^2,   dt = t - t0.
double efficiency_at(double t_ns, const SpinwaveModelParams& p, const HyperfineSplittings& hf);

// The secular prefactor of efficiency_at alone (beating factor = 1).
double envelope_at(double t_ns, const SpinwaveModelParams& p);

// |...|^2/(1+A+B+C+D)^2 alone, so efficiency_at = envelope_at * beating_factor.
double beating_factor(double t_ns, const SpinwaveModelParams& p, const HyperfineSplittings& hf);

// Attainable supremum of beating_factor over the beating phases, respecting
// the w23+w34 phase constraint of the fourth term. Frequency-independent.
double beating_supremum(const SpinwaveModelParams& p);

// Smallest t > t0 where the upper envelope of the oscillation,
// envelope_at(t) * beating_supremum, crosses eta(t0)/e. The beating maxima can
// exceed the secular envelope when amplitudes carry mixed signs, which is why
// the supremum enters. nullopt when no crossing occurs within the horizon.
std::optional<double> one_over_e_time_ns(const SpinwaveModelParams& p,
                                         const HyperfineSplittings& hf,
                                         double horizon_ns = 0.0);

}  // namespace vapormem
