#pragma once

#include <numbers>

namespace sagnac {

/// Fundamental constants, CODATA 2018 values in SI units. Fixed at build
/// time and never configurable, so identical inputs reproduce identical
/// output bit for bit across runs.
struct PhysicalConstants {
    double c;     ///< speed of light in vacuum [m/s]
    double hbar;  ///< reduced Planck constant [J s]
    double eps0;  ///< vacuum permittivity [F/m]
    double amu;   ///< atomic mass unit [kg]
};

inline constexpr PhysicalConstants constants{
    299792458.0,       // c (exact by definition)
    1.054571817e-34,   // hbar
    8.8541878128e-12,  // eps0
    1.66053906660e-27, // amu
};

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

} // namespace sagnac
