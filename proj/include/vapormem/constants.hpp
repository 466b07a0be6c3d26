#pragma once

#include <cmath>
#include <numbers>

namespace vapormem {

inline constexpr double k_boltzmann_j_per_k = 1.380649e-23;
inline constexpr double atomic_mass_unit_kg = 1.66053906660e-27;
inline constexpr double cs133_mass_kg = 132.905451931 * atomic_mass_unit_kg;

// Transform limit of a Gaussian pulse: fwhm_time * fwhm_freq = 2 ln2 / pi.
inline constexpr double gaussian_time_bandwidth =
    2.0 * std::numbers::ln2 / std::numbers::pi;

// fwhm = fwhm_over_sigma * sigma for a Gaussian.
inline const double fwhm_over_sigma = 2.0 * std::sqrt(2.0 * std::numbers::ln2);

// Cs-Cs collisional decoherence happens on a ~150 us scale, three orders of
// magnitude beyond the ns storage times treated here; it is documented as a
// constant but not modeled.
inline constexpr double cs_collision_decoherence_s = 150e-6;

}  // namespace vapormem
