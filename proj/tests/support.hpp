#pragma once

// Shared fixtures: the sodium-like reference atom at a 500 nm probe, plus a
// builder producing a medium segment with prescribed xi, eta and opacity.

#include <cmath>

#include "sagnac/medium.hpp"
#include "sagnac/types.hpp"

namespace testbed {

inline const sagnac::AtomSpecies kSpecies{23.0 * sagnac::constants.amu, 2.1e-29, 0.0};
inline const sagnac::ProbeField kProbe{500e-9, 1e-6};
inline constexpr double kEarthRate = 7.29e-5; // rad/s

inline sagnac::MediumSegment medium_for(double xi, double eta, double temperature_ratio,
                                        double alpha, double gamma, double length) {
    using namespace sagnac;
    const double g = coupling_constant(kSpecies, kProbe);
    const double n = alpha * gamma * constants.c / (g * g * length);
    const double s = tan2_theta_critical(kProbe, kSpecies);
    const double rabi = g * std::sqrt(n) * std::sqrt(xi / s);
    return MediumSegment{length, n, gamma, ControlField{{rabi, 0.0}, eta}, temperature_ratio};
}

inline sagnac::LoopGeometry uniform_loop_for(double xi, double eta,
                                             double temperature_ratio = 0.0,
                                             double radius = 0.1, double alpha = 100.0,
                                             double gamma = 1e7) {
    return sagnac::uniform_loop(
        radius, medium_for(xi, eta, temperature_ratio, alpha, gamma,
                           sagnac::two_pi * radius));
}

} // namespace testbed
