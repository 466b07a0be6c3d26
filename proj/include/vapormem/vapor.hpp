#pragma once

// Thermodynamic quantities of the heated alkali vapor cell: thermal velocity,
// number density from a vapor-pressure correlation, Doppler width.

namespace vapormem {

struct VaporConditions {
    double temperature_k;
    double atomic_mass_kg;
    double cell_length_m;
    double cell_diameter_m;

    void validate() const;
};

// log10(P / Pa) = a + b/T + c*log10(T) + d*T, liquid-phase branch.
// Coefficients come from config; they are external literature values.
struct VaporPressureCoefficients {
    double a;
    double b;
    double c;
    double d;
    double t_min_k;
    double t_max_k;

    void validate() const;
};

// 1-D RMS thermal velocity sqrt(kB*T/m). This convention is fixed project-wide;
// every downstream dephasing formula assumes it.
double thermal_velocity_m_per_s(const VaporConditions& cond);

// Vapor pressure in Pa from the correlation. Throws std::out_of_range when T
// is outside the coefficient validity range.
double vapor_pressure_pa(const VaporConditions& cond, const VaporPressureCoefficients& coeffs);

// Ideal-gas number density n = P(T)/(kB*T) in m^-3.
double number_density_per_m3(const VaporConditions& cond, const VaporPressureCoefficients& coeffs);

// Gaussian Doppler FWHM (1/lambda)*sqrt(8 ln2 kB T / m), reported in MHz.
double doppler_fwhm_mhz(double wavelength_m, const VaporConditions& cond);

}  // namespace vapormem
