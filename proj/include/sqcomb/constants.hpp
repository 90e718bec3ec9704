#pragma once

// Physical constants in CGS-flavoured spectroscopy units (cm, g, erg, atm).
namespace sqcomb::constants {

inline constexpr double boltzmann_erg_per_k = 1.380649e-16;
inline constexpr double speed_of_light_cm_per_s = 2.99792458e10;
inline constexpr double amu_g = 1.66053906660e-24;
inline constexpr double atm_dyn_per_cm2 = 1.01325e6;
inline constexpr double reference_temperature_k = 296.0;

}  // namespace sqcomb::constants
