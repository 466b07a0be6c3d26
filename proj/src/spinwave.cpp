#include "vapormem/spinwave.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vapormem {

namespace {
constexpr double pi = std::numbers::pi;
// rad/ns per MHz of ordinary frequency
constexpr double omega_per_mhz = 2.0 * pi * 1e-3;
}  // namespace

void SpinwaveGeometry::validate() const {
    if (!(signal_wavelength_m > 0.0) || !(control_wavelength_m > 0.0))
        throw std::invalid_argument("SpinwaveGeometry: wavelengths must be > 0");
}

void HyperfineSplittings::validate() const {
    if (f23_mhz < 0.0 || f34_mhz < 0.0 || f45_mhz < 0.0)
        throw std::invalid_argument("HyperfineSplittings: splittings must be >= 0");
}

void SpinwaveModelParams::validate() const {
    if (!(eta0 >= 0.0 && eta0 <= 1.0))
        throw std::invalid_argument("SpinwaveModelParams: eta0 must be in [0, 1]");
    if (!(tau_s_ns > 0.0) || !(tau_bar_ns > 0.0))
        throw std::invalid_argument("SpinwaveModelParams: tau_s and tau_bar must be > 0");
    if (1.0 + a + b + c + d == 0.0)
        throw std::invalid_argument("SpinwaveModelParams: 1+A+B+C+D must not vanish");
}

SpinwaveWavelength spinwave_wavelength(const SpinwaveGeometry& geom) {
    geom.validate();
    const double inv_s = 1.0 / geom.signal_wavelength_m;
    const double inv_c = 1.0 / geom.control_wavelength_m;
    double inv_mismatch;  // |dk| / (2*pi), in 1/m
    if (geom.propagation == Propagation::counter) {
        inv_mismatch = std::abs(inv_s - inv_c);
        if (inv_mismatch == 0.0)
            return {std::numeric_limits<double>::infinity(), true};
    } else {
        inv_mismatch = inv_s + inv_c;
    }
    return {1e6 / inv_mismatch, false};
}

double inhomogeneous_dephasing_time_ns(double lambda_spin_um, double v_th_m_per_s) {
    if (!std::isfinite(lambda_spin_um) || !(lambda_spin_um > 0.0))
        throw std::domain_error("inhomogeneous_dephasing_time_ns: lambda_spin must be finite and > 0");
    if (v_th_m_per_s < 0.0)
        throw std::domain_error("inhomogeneous_dephasing_time_ns: v_th must be >= 0");
    if (v_th_m_per_s == 0.0) return std::numeric_limits<double>::infinity();
    const double t_s = lambda_spin_um * 1e-6 / (std::sqrt(2.0) * pi * v_th_m_per_s);
    return t_s * 1e9;
}

double envelope_at(double t_ns, const SpinwaveModelParams& p) {
    const double dt = t_ns - p.t0_ns;
    const double arg = (dt - p.tau_s_ns) * (dt + p.tau_bar_ns) / (p.tau_s_ns * p.tau_bar_ns) + 1.0;
    return p.eta0 * std::exp(-arg);
}

double beating_factor(double t_ns, const SpinwaveModelParams& p, const HyperfineSplittings& hf) {
    const double dt = t_ns - p.t0_ns;
    const double w23 = omega_per_mhz * hf.f23_mhz;
    const double w34 = omega_per_mhz * hf.f34_mhz;
    const double w45 = omega_per_mhz * hf.f45_mhz;
    const std::complex<double> i{0.0, 1.0};
    const std::complex<double> z = 1.0 + p.a * std::exp(-i * (w23 * dt)) +
                                   p.b * std::exp(-i * (w34 * dt)) +
                                   p.c * std::exp(-i * (w45 * dt)) +
                                   p.d * std::exp(-i * ((w23 + w34) * dt));
    const double denom = 1.0 + p.a + p.b + p.c + p.d;
    return std::norm(z) / (denom * denom);
}

double efficiency_at(double t_ns, const SpinwaveModelParams& p, const HyperfineSplittings& hf) {
    return envelope_at(t_ns, p) * beating_factor(t_ns, p, hf);
}

double beating_supremum(const SpinwaveModelParams& p) {
    if (p.a == 0.0 && p.b == 0.0 && p.c == 0.0 && p.d == 0.0) return 1.0;
    // sup over free phases (p1, p2, p3) of
    //   |1 + A e^{ip1} + B e^{ip2} + C e^{ip3} + D e^{i(p1+p2)}|.
    // p3 decouples: it contributes |C| on top of
    //   f(p1,p2) = |1 + A e^{ip1} + B e^{ip2} + D e^{i(p1+p2)}|.
    // Maximize f on a phase grid, then refine around the best cell.
    const auto f = [&](double p1, double p2) {
        const std::complex<double> i{0.0, 1.0};
        return std::abs(1.0 + p.a * std::exp(i * p1) + p.b * std::exp(i * p2) +
                        p.d * std::exp(i * (p1 + p2)));
    };
    const int n = 256;
    double best = -1.0, b1 = 0.0, b2 = 0.0;
    for (int i1 = 0; i1 < n; ++i1) {
        const double p1 = 2.0 * pi * i1 / n;
        for (int i2 = 0; i2 < n; ++i2) {
            const double p2 = 2.0 * pi * i2 / n;
            const double v = f(p1, p2);
            if (v > best) { best = v; b1 = p1; b2 = p2; }
        }
    }
    double h = 2.0 * pi / n;
    for (int round = 0; round < 24; ++round) {
        double rb = best, rb1 = b1, rb2 = b2;
        for (int i1 = -2; i1 <= 2; ++i1) {
            for (int i2 = -2; i2 <= 2; ++i2) {
                const double v = f(b1 + i1 * h / 2.0, b2 + i2 * h / 2.0);
                if (v > rb) { rb = v; rb1 = b1 + i1 * h / 2.0; rb2 = b2 + i2 * h / 2.0; }
            }
        }
        best = rb; b1 = rb1; b2 = rb2;
        h /= 2.0;
    }
    const double s_max = best + std::abs(p.c);
    const double denom = 1.0 + p.a + p.b + p.c + p.d;
    return (s_max * s_max) / (denom * denom);
}

std::optional<double> one_over_e_time_ns(const SpinwaveModelParams& p,
                                         const HyperfineSplittings& hf,
                                         double horizon_ns) {
    p.validate();
    hf.validate();
    const double sup = beating_supremum(p);
    const double target = efficiency_at(p.t0_ns, p, hf) / std::numbers::e;
    const auto upper = [&](double t) { return envelope_at(t, p) * sup; };

    const double tau_max = std::max(p.tau_s_ns, p.tau_bar_ns);
    if (horizon_ns <= 0.0) horizon_ns = p.t0_ns + 12.0 * tau_max;

    // March past any initial rise of the envelope, then bracket the crossing.
    const double step = std::min(p.tau_s_ns, p.tau_bar_ns) / 64.0;
    double lo = p.t0_ns;
    double hi = lo;
    bool bracketed = false;
    for (double t = p.t0_ns + step; t <= horizon_ns; t += step) {
        if (upper(t) < target && upper(t - step) >= target) {
            lo = t - step;
            hi = t;
            bracketed = true;
            break;
        }
    }
    if (!bracketed) return std::nullopt;
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-12 * std::max(1.0, std::abs(hi)); ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (upper(mid) >= target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace vapormem
