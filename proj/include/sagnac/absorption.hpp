#pragma once

#include <cmath>
#include <stdexcept>

#include "sagnac/medium.hpp"
#include "sagnac/types.hpp"

namespace sagnac {

/// Two bookkeepings of the thermal absorption coefficient. They agree at
/// eta = 1 and differ by eta^2 otherwise:
///   general - eta (k_p L)^2/alpha * (T/T_rec) / (xi (xi + eta)), the form the
///             thermal propagation equation produces term by term;
///   fig3    - (k_p L)^2/(eta alpha) * (T/T_rec) / (xi (xi + 1)), the compact
///             form behind the absorption figure.
enum class AbsorptionMode { general, fig3 };

/// kappa L of one segment from dimensionless inputs.
inline double kappa_l(double xi, double eta, double kp_l, double alpha,
                      double temperature_ratio, AbsorptionMode mode) {
    if (!(xi > 0.0))
        throw std::invalid_argument("kappa_l: xi must be > 0");
    if (!(alpha > 0.0))
        throw std::invalid_argument("kappa_l: alpha must be > 0");
    if (mode == AbsorptionMode::general) {
        // the whole term carries an eta factor, so eta = 0 means no Doppler
        // absorption channel
        return eta * kp_l * kp_l / alpha * temperature_ratio / (xi * (xi + eta));
    }
    if (eta == 0.0)
        throw std::domain_error(
            "kappa_l: fig3 form divides by eta; eta = 0 has no Doppler "
            "absorption channel (use the general form)");
    return kp_l * kp_l / (eta * alpha) * temperature_ratio / (xi * (xi + 1.0));
}

/// kappa L of one segment from its physical description. Vacuum segments
/// absorb nothing.
inline double absorption_coefficient(const MediumSegment& seg, const ProbeField& probe,
                                     const AtomSpecies& species, AbsorptionMode mode) {
    if (seg.is_vacuum()) return 0.0;
    const DerivedMediumQuantities q = derive_medium(seg, probe, species);
    return kappa_l(q.xi, seg.control.eta, probe.wavenumber() * seg.length, q.alpha,
                   seg.temperature_ratio, mode);
}

/// Smallest xi keeping kappa L <= budget, by inverting the quadratic in xi.
/// With C the kappa L numerator the general form solves xi (xi + eta) = C/budget,
/// the fig3 form xi (xi + 1) = C/budget.
inline double min_xi_for_absorption(const MediumSegment& seg, const ProbeField& probe,
                                    const AtomSpecies& species, double kappa_budget,
                                    AbsorptionMode mode) {
    if (!(kappa_budget > 0.0))
        throw std::invalid_argument("min_xi_for_absorption: kappa_budget must be > 0");
    if (seg.is_vacuum()) return 0.0;
    const DerivedMediumQuantities q = derive_medium(seg, probe, species);
    const double eta = seg.control.eta;
    const double kp_l = probe.wavenumber() * seg.length;
    double numerator, linear;
    if (mode == AbsorptionMode::general) {
        numerator = eta * kp_l * kp_l / q.alpha * seg.temperature_ratio;
        linear = eta;
    } else {
        if (eta == 0.0)
            throw std::domain_error(
                "min_xi_for_absorption: fig3 form divides by eta; eta = 0 has no "
                "Doppler absorption channel");
        numerator = kp_l * kp_l / (eta * q.alpha) * seg.temperature_ratio;
        linear = 1.0;
    }
    return 0.5 * (-linear + std::sqrt(linear * linear + 4.0 * numerator / kappa_budget));
}

/// Collision-limited lower bound on v_gr/v_rec: the probe must traverse the
/// sample between two successive velocity-changing collisions, giving
/// L n sigma sqrt(T/T_rec). Zero cross section (coherent sample) returns 0.
inline double collision_limited_vgr_min(const MediumSegment& seg, const AtomSpecies& species) {
    if (seg.is_vacuum()) return 0.0;
    // density * cross_section first: the column density of scatterers is the
    // best-conditioned pairing for round decimal inputs.
    return seg.density * species.cross_section * seg.length * std::sqrt(seg.temperature_ratio);
}

} // namespace sagnac
