#pragma once

#include <cmath>
#include <stdexcept>

#include "sagnac/medium.hpp"
#include "sagnac/types.hpp"

namespace sagnac {

/// Fraction of a segment's rotational phase carried by the light component,
/// xi/(xi + eta). An infinite xi (vacuum) contributes as pure light.
inline double light_weight(double xi, double eta) {
    if (std::isinf(xi)) return 1.0;
    if (xi == 0.0 && eta == 0.0)
        throw std::domain_error(
            "degenerate segment: xi = 0 with eta = 0 gives zero group velocity, "
            "rotational phase undefined");
    return xi / (xi + eta);
}

/// Matter-component fraction eta/(xi + eta); complements light_weight.
inline double matter_weight(double xi, double eta) {
    if (std::isinf(xi)) return 0.0;
    if (xi == 0.0 && eta == 0.0)
        throw std::domain_error(
            "degenerate segment: xi = 0 with eta = 0 gives zero group velocity, "
            "rotational phase undefined");
    return eta / (xi + eta);
}

/// Rotational phase of a purely optical ring interferometer of the same
/// area: (4 pi/(lambda c)) Omega A with A = pi R^2.
inline double sagnac_phase_optical(const LoopGeometry& loop, double omega,
                                   const ProbeField& probe) {
    return 4.0 * pi / (probe.wavelength * constants.c) * omega * loop.area();
}

/// Rotational phase of the hybrid light/matter-wave interferometer,
///   dphi = (2 pi Omega R/(lambda c)) sum L xi/(xi+eta)
///        + (Omega R m/hbar)          sum L eta/(xi+eta).
/// Vacuum segments enter the first sum with weight 1. The first term is the
/// optical Sagnac contribution, the second the matter-wave one, enhanced by
/// m c^2/(hbar omega_p) relative to the optical scale.
inline double sagnac_phase_hybrid(const LoopGeometry& loop, double omega,
                                  const ProbeField& probe, const AtomSpecies& species) {
    const double g = coupling_constant(species, probe);
    const double crit = tan2_theta_critical(probe, species);
    const double omega_r = omega * loop.radius;

    double light_sum = 0.0;
    double matter_sum = 0.0;
    for (const auto& seg : loop.segments) {
        if (seg.is_vacuum()) {
            light_sum += seg.length;
            continue;
        }
        const double xi = xi_parameter(tan2_theta(seg, g), crit);
        const double eta = seg.control.eta;
        light_sum += seg.length * light_weight(xi, eta);
        matter_sum += seg.length * matter_weight(xi, eta);
    }
    return two_pi * omega_r / (probe.wavelength * constants.c) * light_sum +
           omega_r * species.mass / constants.hbar * matter_sum;
}

/// Ratio hybrid/optical. Undefined at omega = 0.
inline double enhancement_factor(const LoopGeometry& loop, double omega,
                                 const ProbeField& probe, const AtomSpecies& species) {
    if (omega == 0.0)
        throw std::domain_error("enhancement_factor: undefined ratio at omega = 0");
    return sagnac_phase_hybrid(loop, omega, probe, species) /
           sagnac_phase_optical(loop, omega, probe);
}

/// Closed form of the enhancement for a uniform full-loop medium:
/// (xi + eta S)/(xi + eta) with S = tan^2(theta_crit) = m c^2/(hbar omega_p).
inline double enhancement_uniform(double xi, double eta, double tan2theta_crit) {
    if (std::isinf(xi)) return 1.0;
    if (xi == 0.0 && eta == 0.0)
        throw std::domain_error("enhancement_uniform: degenerate xi = eta = 0");
    return (xi + eta * tan2theta_crit) / (xi + eta);
}

} // namespace sagnac
