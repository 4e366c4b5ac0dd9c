#pragma once

#include <array>
#include <cmath>
#include <string_view>

#include "sagnac/absorption.hpp"
#include "sagnac/medium.hpp"
#include "sagnac/types.hpp"

namespace sagnac {

/// Named boolean checks for the regime in which the closed-form phase and
/// absorption expressions hold. epsilon is the numeric stand-in for "much
/// smaller than" (default 1e-2).
struct ValidityFlags {
    /// (a) Doppler spread small against control power: eta k_p^2 <v^2> <= eps |Omega_c|^2
    bool doppler_vs_control = true;
    /// (b) same against the power-broadened linewidth: eta k_p^2 <v^2> <= eps |Omega_c|^4/gamma^2
    bool doppler_vs_linewidth = true;
    /// (c) transparency window wide enough: xi >= 1/alpha
    bool xi_above_inverse_opacity = true;
    /// (d) amplitude decrease less than e^-1: kappa L <= 1
    bool absorption_within_budget = true;
    /// (e) first order in the rotation rate: Omega R <= eps v_rec and <= eps c
    bool rotation_first_order = true;

    bool all() const {
        return doppler_vs_control && doppler_vs_linewidth && xi_above_inverse_opacity &&
               absorption_within_budget && rotation_first_order;
    }

    ValidityFlags& operator&=(const ValidityFlags& o) {
        doppler_vs_control &= o.doppler_vs_control;
        doppler_vs_linewidth &= o.doppler_vs_linewidth;
        xi_above_inverse_opacity &= o.xi_above_inverse_opacity;
        absorption_within_budget &= o.absorption_within_budget;
        rotation_first_order &= o.rotation_first_order;
        return *this;
    }
};

inline constexpr std::array<std::string_view, 5> validity_flag_names{
    "doppler_vs_control", "doppler_vs_linewidth", "xi_above_inverse_opacity",
    "absorption_within_budget", "rotation_first_order"};

inline std::array<bool, 5> as_array(const ValidityFlags& f) {
    return {f.doppler_vs_control, f.doppler_vs_linewidth, f.xi_above_inverse_opacity,
            f.absorption_within_budget, f.rotation_first_order};
}

/// Evaluates all flags for one segment. Vacuum segments pass everything but
/// the rotation check, which is segment independent. kappa L is evaluated in
/// the general bookkeeping and allowed 1e-9 slack so a configuration sitting
/// exactly on the budget counts as inside it.
inline ValidityFlags validity_check(const MediumSegment& seg, const ProbeField& probe,
                                    const AtomSpecies& species, double omega_r,
                                    double epsilon = 1e-2) {
    ValidityFlags f;
    const double v_rec = recoil_velocity(probe, species);
    f.rotation_first_order = std::abs(omega_r) <= epsilon * v_rec &&
                             std::abs(omega_r) <= epsilon * constants.c;
    if (seg.is_vacuum()) return f;

    const DerivedMediumQuantities q = derive_medium(seg, probe, species);
    const double kp = probe.wavenumber();
    const double v2 = seg.temperature_ratio * v_rec * v_rec;
    const double doppler = seg.control.eta * kp * kp * v2;
    const double rabi2 = std::norm(seg.control.rabi_frequency);
    f.doppler_vs_control = doppler <= epsilon * rabi2;
    f.doppler_vs_linewidth = doppler <= epsilon * rabi2 * rabi2 / (seg.gamma * seg.gamma);
    f.xi_above_inverse_opacity = q.xi >= 1.0 / q.alpha;
    const double kl = kappa_l(q.xi, seg.control.eta, kp * seg.length, q.alpha,
                              seg.temperature_ratio, AbsorptionMode::general);
    f.absorption_within_budget = kl <= 1.0 + 1e-9;
    return f;
}

} // namespace sagnac
