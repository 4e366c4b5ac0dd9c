#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sagnac/types.hpp"

namespace sagnac {

/// Probe-transition coupling constant g = d * sqrt(omega_p/(2 hbar eps0 F)).
/// Units: rad/s per sqrt(m^-3), so that g^2 n carries (rad/s)^2.
inline double coupling_constant(const AtomSpecies& species, const ProbeField& probe) {
    return species.dipole_moment *
           std::sqrt(probe.angular_frequency() /
                     (2.0 * constants.hbar * constants.eps0 * probe.beam_area));
}

/// Recoil velocity v_rec = hbar k_p / m.
inline double recoil_velocity(const ProbeField& probe, const AtomSpecies& species) {
    return constants.hbar * probe.wavenumber() / species.mass;
}

/// Polariton mixing angle, tan^2(theta) = g^2 n / |Omega_c|^2.
inline double tan2_theta(const MediumSegment& seg, double g) {
    return g * g * seg.density / std::norm(seg.control.rabi_frequency);
}

/// Critical mixing angle: tan^2(theta_crit) = c/v_rec = m c^2/(hbar omega_p).
/// Beyond it the excitation travels essentially as a matter wave.
inline double tan2_theta_critical(const ProbeField& probe, const AtomSpecies& species) {
    return constants.c / recoil_velocity(probe, species);
}

/// Group velocity of the dark-state polariton,
/// v_gr = c cos^2(theta) + eta v_rec sin^2(theta).
/// The second term is the recoil contribution from the momentum transfer.
inline double group_velocity(double tan2theta, double eta, double v_rec) {
    if (!(tan2theta >= 0.0))
        throw std::invalid_argument("group_velocity: tan2_theta must be >= 0");
    if (eta < 0.0)
        throw std::invalid_argument("group_velocity: eta must be >= 0");
    if (std::isinf(tan2theta)) return eta * v_rec; // pure matter limit
    const double cos2 = 1.0 / (1.0 + tan2theta);
    const double sin2 = tan2theta / (1.0 + tan2theta);
    return constants.c * cos2 + eta * v_rec * sin2;
}

/// xi = tan^2(theta_crit)/tan^2(theta), the knob interpolating between the
/// light regime (xi large) and the matter regime (xi small). Satisfies
/// c cos^2(theta) = xi v_rec sin^2(theta) identically. Returns +infinity for
/// tan2_theta = 0; callers treat an infinite xi as a pure-light segment.
inline double xi_parameter(double tan2theta, double tan2theta_crit) {
    if (!(tan2theta >= 0.0))
        throw std::invalid_argument("xi_parameter: tan2_theta must be >= 0");
    if (tan2theta == 0.0) return std::numeric_limits<double>::infinity();
    return tan2theta_crit / tan2theta;
}

/// Resonant optical depth without the control field, alpha = g^2 n L/(gamma c).
/// A vacuum segment has zero opacity.
inline double opacity(const MediumSegment& seg, double g) {
    if (seg.is_vacuum()) return 0.0;
    return g * g * seg.density * seg.length / (seg.gamma * constants.c);
}

/// Everything derived from one segment plus the global species/probe pair.
struct DerivedMediumQuantities {
    double g = 0.0;               ///< coupling constant [rad/s per sqrt(m^-3)]
    double tan2_theta = 0.0;      ///< g^2 n/|Omega_c|^2
    double tan2_theta_crit = 0.0; ///< c/v_rec
    double v_rec = 0.0;           ///< [m/s]
    double v_gr = 0.0;            ///< [m/s]
    double xi = 0.0;              ///< tan2_theta_crit/tan2_theta
    double alpha = 0.0;           ///< opacity
};

inline DerivedMediumQuantities derive_medium(const MediumSegment& seg, const ProbeField& probe,
                                             const AtomSpecies& species) {
    DerivedMediumQuantities q;
    q.g = coupling_constant(species, probe);
    q.v_rec = recoil_velocity(probe, species);
    q.tan2_theta_crit = tan2_theta_critical(probe, species);
    q.tan2_theta = seg.is_vacuum() ? 0.0 : tan2_theta(seg, q.g);
    const double eta = seg.is_vacuum() ? 0.0 : seg.control.eta;
    q.v_gr = group_velocity(q.tan2_theta, eta, q.v_rec);
    q.xi = xi_parameter(q.tan2_theta, q.tan2_theta_crit);
    q.alpha = opacity(seg, q.g);
    return q;
}

} // namespace sagnac
