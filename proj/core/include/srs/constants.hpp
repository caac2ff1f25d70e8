#pragma once

// CODATA 2018 values, SI units throughout.
namespace srs::constants {

inline constexpr double c = 299792458.0;           // speed of light, m/s (exact)
inline constexpr double hbar = 1.054571817e-34;    // reduced Planck constant, J s
inline constexpr double eps0 = 8.8541878128e-12;   // vacuum permittivity, F/m
inline constexpr double amu = 1.66053906660e-27;   // atomic mass unit, kg
inline constexpr double pi = 3.141592653589793238462643383279502884;

} // namespace srs::constants
