#include "vapormem/vapor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vapormem/constants.hpp"

namespace vapormem {

void VaporConditions::validate() const {
    if (!(temperature_k > 0.0))
        throw std::invalid_argument("VaporConditions: temperature_k must be > 0");
    if (!(atomic_mass_kg > 0.0))
        throw std::invalid_argument("VaporConditions: atomic_mass_kg must be > 0");
    if (!(cell_length_m > 0.0))
        throw std::invalid_argument("VaporConditions: cell_length_m must be > 0");
}

void VaporPressureCoefficients::validate() const {
    if (!(t_min_k > 0.0) || !(t_max_k > t_min_k))
        throw std::invalid_argument("VaporPressureCoefficients: invalid validity range");
}

double thermal_velocity_m_per_s(const VaporConditions& cond) {
    cond.validate();
    return std::sqrt(k_boltzmann_j_per_k * cond.temperature_k / cond.atomic_mass_kg);
}

double vapor_pressure_pa(const VaporConditions& cond, const VaporPressureCoefficients& coeffs) {
    cond.validate();
    coeffs.validate();
    const double t = cond.temperature_k;
    if (t < coeffs.t_min_k || t > coeffs.t_max_k)
        throw std::out_of_range("vapor_pressure_pa: temperature " + std::to_string(t) +
                                " K outside correlation validity [" +
                                std::to_string(coeffs.t_min_k) + ", " +
                                std::to_string(coeffs.t_max_k) + "] K");
    const double log10p = coeffs.a + coeffs.b / t + coeffs.c * std::log10(t) + coeffs.d * t;
    return std::pow(10.0, log10p);
}

double number_density_per_m3(const VaporConditions& cond, const VaporPressureCoefficients& coeffs) {
    return vapor_pressure_pa(cond, coeffs) / (k_boltzmann_j_per_k * cond.temperature_k);
}

double doppler_fwhm_mhz(double wavelength_m, const VaporConditions& cond) {
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("doppler_fwhm_mhz: wavelength must be > 0");
    cond.validate();
    const double fwhm_hz = std::sqrt(8.0 * std::numbers::ln2 * k_boltzmann_j_per_k *
                                     cond.temperature_k / cond.atomic_mass_kg) /
                           wavelength_m;
    return fwhm_hz * 1e-6;
}

}  // namespace vapormem
