#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "sagnac/constants.hpp"

namespace sagnac {

/// How the slow z-derivatives of the matter amplitudes are treated in the
/// stationary solve. zeroth drops them (adiabatic following); first feeds
/// them back self-consistently through the probe equation, which is the
/// perturbative step that produces the group-velocity denominator of the
/// phase gradient.
enum class CoherenceOrder { zeroth = 0, first = 1 };

/// Segment-level inputs of the per-velocity-class coherence solve.
struct CoherenceParams {
    double g_sqrt_n = 0.0;                 ///< g sqrt(n) [rad/s]
    double gamma = 0.0;                    ///< excited-state decay [rad/s]
    std::complex<double> control{0.0, 0.0}; ///< Omega_c [rad/s]
    double eta = 1.0;                      ///< momentum-transfer parameter
    double k_p = 0.0;                      ///< probe wavenumber [rad/m]
    double v_rec = 0.0;                    ///< recoil velocity [m/s]
    double omega_r = 0.0;                  ///< rotation speed Omega R [m/s]
};

/// Matter amplitudes of one velocity class together with the probe value
/// they respond to. phi2 is the optical (probe-transition) coherence that
/// sources the probe field; phi3 the Raman (spin) coherence that carries the
/// dark-state population.
struct CoherenceState {
    std::complex<double> phi2{0.0, 0.0};
    std::complex<double> phi3{0.0, 0.0};
    std::complex<double> probe{0.0, 0.0};
};

namespace detail {

inline void check_not_singular(std::complex<double> det, double scale, double omega_eff) {
    if (std::abs(det) < 1e-12 * scale)
        throw std::domain_error(
            "stationary_coherences: singular system, |Omega_c|^2 matches the "
            "two-photon resonance eta k_p (Omega R - v) (k_p (Omega R - v) + i gamma) "
            "at effective detuning k_p (Omega R - v) = " +
            std::to_string(omega_eff));
}

} // namespace detail

/// Stationary matter response of one velocity class to a probe amplitude.
///
/// The class sees the loop rotation Doppler shifted, Omega R -> Omega R - v.
/// With w = k_p (Omega R - v) the stationary 2x2 system for (phi2, phi3) is
///
///   -(w + i gamma) phi2 + Omega_c  phi3 = -g sqrt(n) Omega_p + i(v_rec - (Omega R - v)) d_z phi2
///   conj(Omega_c)  phi2 - eta w    phi3 =                      i(eta v_rec - (Omega R - v)) d_z phi3
///
/// order zeroth solves it with the derivative column zeroed. order first
/// closes the derivatives through the probe equation: d_z phi_j = A_j d_z
/// Omega_p with A_j the order-zero response ratios and c d_z Omega_p =
/// i k_p Omega R Omega_p - i g sqrt(n) phi2 taken at the unknown phi2, which
/// keeps the system linear.
inline CoherenceState stationary_coherences(double v, std::complex<double> probe,
                                            const CoherenceParams& p,
                                            CoherenceOrder order = CoherenceOrder::first) {
    using cd = std::complex<double>;
    const cd i(0.0, 1.0);
    if (std::abs(p.control) == 0.0)
        throw std::invalid_argument("stationary_coherences: control field must be nonzero");
    if (probe == cd{0.0, 0.0}) return CoherenceState{{0.0, 0.0}, {0.0, 0.0}, probe};

    const double drift = p.omega_r - v;
    const double w = p.k_p * drift;
    const cd m11 = -(cd(w, 0.0) + i * p.gamma);
    const cd m12 = p.control;
    const cd m21 = std::conj(p.control);
    const cd m22 = cd(-p.eta * w, 0.0);
    const cd b1 = -p.g_sqrt_n * probe;

    const double scale =
        std::norm(p.control) + std::abs(p.eta * w) * std::hypot(w, p.gamma);
    const cd det0 = m11 * m22 - m12 * m21;
    detail::check_not_singular(det0, scale, w);

    CoherenceState out;
    out.probe = probe;
    const cd phi2_0 = (b1 * m22) / det0;
    const cd phi3_0 = (m11 * cd(0.0, 0.0) - m21 * b1) / det0;
    if (order == CoherenceOrder::zeroth) {
        out.phi2 = phi2_0;
        out.phi3 = phi3_0;
        return out;
    }

    // order-zero response ratios, independent of the probe amplitude
    const cd a2 = phi2_0 / probe;
    const cd a3 = phi3_0 / probe;
    // derivative feedbacks: i (v_drift) d_z phi_j with d_z Omega_p from the
    // probe equation, folded into the phi2 column
    const cd q1 = -(p.v_rec - drift) * a2 / constants.c;
    const cd q2 = -(p.eta * p.v_rec - drift) * a3 / constants.c;
    const double k_omega = p.k_p * p.omega_r;

    const cd n11 = m11 + q1 * p.g_sqrt_n;
    const cd n21 = m21 + q2 * p.g_sqrt_n;
    const cd r1 = b1 + q1 * k_omega * probe;
    const cd r2 = q2 * k_omega * probe;

    const cd det1 = n11 * m22 - m12 * n21;
    detail::check_not_singular(det1, scale, w);
    out.phi2 = (r1 * m22 - m12 * r2) / det1;
    out.phi3 = (n11 * r2 - n21 * r1) / det1;
    return out;
}

} // namespace sagnac
