#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "sagnac/coherences.hpp"
#include "sagnac/medium.hpp"
#include "sagnac/types.hpp"
#include "sagnac/velocity_grid.hpp"

namespace sagnac {

struct PropagationOptions {
    int quadrature_order = 64;      ///< velocity classes per medium segment
    int min_steps_per_segment = 512; ///< ceiling on the step size, L/this
    double rel_tol = 1e-9;          ///< integrator relative tolerance
    CoherenceOrder order = CoherenceOrder::first;
};

/// Complex probe transmission along the loop periphery.
struct PropagationResult {
    std::vector<double> z_grid;                    ///< [m], cumulative along the loop
    std::vector<std::complex<double>> probe_trace; ///< Omega_p at z_grid
    double phase = 0.0;          ///< unwrapped arg(Omega_p(L)/Omega_p(0)) [rad]
    double log_amplitude = 0.0;  ///< ln|Omega_p(L)/Omega_p(0)|
    double error_estimate = 0.0; ///< accumulated local truncation error, relative
};

namespace detail {

/// One adaptive Dormand-Prince 5(4) integration of d_y/dz = rhs(y) over
/// [0, length]. The system is linear in y, so the working amplitude is
/// renormalized whenever it decays far below unity; phase and log-amplitude
/// increments are accumulated per accepted step, which keeps both exact for
/// transmissions far beyond double range.
template <typename Rhs>
void integrate_segment(Rhs&& rhs, double length, double rel_tol, int min_steps,
                       int segment_index, std::complex<double>& y, double& phase,
                       double& log_amplitude, double& error_estimate, double z0,
                       std::vector<double>& z_grid,
                       std::vector<std::complex<double>>& trace,
                       const std::complex<double>& probe_in) {
    using cd = std::complex<double>;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640,
                            e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    const double h_max = length / static_cast<double>(min_steps);
    const double h_min = length * 1e-15;
    double z = 0.0;
    double h = h_max;

    while (z < length) {
        h = std::min(h, length - z);
        if (h < h_min)
            throw std::runtime_error(
                "propagate_probe: step size underflow in segment " +
                std::to_string(segment_index) + " at z = " + std::to_string(z0 + z) + " m");

        const cd k1 = rhs(y);
        const cd k2 = rhs(y + h * (a21 * k1));
        const cd k3 = rhs(y + h * (a31 * k1 + a32 * k2));
        const cd k4 = rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const cd k5 = rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const cd k6 = rhs(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const cd y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const cd k7 = rhs(y_new);
        const double err =
            std::abs(h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));

        const double tol = rel_tol * std::max(std::abs(y), std::abs(y_new)) + rel_tol * 1e-12;
        const double dphi = std::arg(y_new / y);
        if (err <= tol && std::abs(dphi) < pi / 2 && std::abs(y_new) > 0.0) {
            z += h;
            phase += dphi;
            log_amplitude += 0.5 * std::log(std::norm(y_new) / std::norm(y));
            error_estimate += err / std::max(std::abs(y_new), 1e-300);
            y = y_new;
            if (std::abs(y) < 1e-6) y /= std::abs(y); // linear system: rescale freely
            z_grid.push_back(z0 + z);
            trace.push_back(probe_in * std::polar(std::exp(log_amplitude), phase));
            const double grow = err > 0.0 ? 0.9 * std::pow(tol / err, 0.2) : 5.0;
            h *= std::clamp(grow, 0.2, 5.0);
            h = std::min(h, h_max);
        } else {
            h *= (err > tol) ? std::clamp(0.9 * std::pow(tol / err, 0.2), 0.1, 0.9) : 0.5;
        }
    }
}

} // namespace detail

/// Integrates the stationary probe equation
///   c d_z Omega_p = i k_p Omega R Omega_p - i g sqrt(n) sum_v w_v phi2_v
/// around the loop. Each medium segment carries its own velocity grid; the
/// matter response per class comes from stationary_coherences evaluated at
/// the current probe value (adiabatic following). Vacuum segments advance
/// the phase by k_p (Omega R/c) dz analytically.
inline PropagationResult propagate_probe(const LoopGeometry& loop, const ProbeField& probe,
                                         const AtomSpecies& species, double omega,
                                         std::complex<double> probe_in,
                                         const PropagationOptions& options = {}) {
    validate(loop);
    validate(probe);
    validate(species);
    if (probe_in == std::complex<double>{0.0, 0.0})
        throw std::invalid_argument("propagate_probe: probe_in must be nonzero");
    if (options.quadrature_order < 1 || options.min_steps_per_segment < 1)
        throw std::invalid_argument("propagate_probe: grid order and step count must be >= 1");

    const double g = coupling_constant(species, probe);
    const double k_p = probe.wavenumber();
    const double v_rec = recoil_velocity(probe, species);
    const double omega_r = omega * loop.radius;

    PropagationResult result;
    result.z_grid.push_back(0.0);
    result.probe_trace.push_back(probe_in);

    std::complex<double> y = probe_in / std::abs(probe_in); // unit working amplitude
    double z0 = 0.0;
    int index = 0;
    for (const auto& seg : loop.segments) {
        if (seg.is_vacuum()) {
            const double dphi = k_p * (omega_r / constants.c) * seg.length;
            result.phase += dphi;
            y *= std::polar(1.0, dphi);
            z0 += seg.length;
            result.z_grid.push_back(z0);
            result.probe_trace.push_back(
                probe_in * std::polar(std::exp(result.log_amplitude), result.phase));
            ++index;
            continue;
        }

        const VelocityGrid grid =
            velocity_grid(seg.temperature_ratio, v_rec, options.quadrature_order);
        const CoherenceParams params{g * std::sqrt(seg.density), seg.gamma,
                                     seg.control.rabi_frequency, seg.control.eta,
                                     k_p, v_rec, omega_r};
        const std::complex<double> i(0.0, 1.0);
        const auto rhs = [&](std::complex<double> field) {
            std::complex<double> source(0.0, 0.0);
            for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
                const CoherenceState s =
                    stationary_coherences(grid.nodes[k], field, params, options.order);
                source += grid.weights[k] * s.phi2;
            }
            return (i * (k_p * omega_r) * field - i * params.g_sqrt_n * source) /
                   constants.c;
        };
        detail::integrate_segment(rhs, seg.length, options.rel_tol,
                                  options.min_steps_per_segment, index, y, result.phase,
                                  result.log_amplitude, result.error_estimate, z0,
                                  result.z_grid, result.probe_trace, probe_in);
        z0 += seg.length;
        ++index;
    }
    return result;
}

/// Rotational phase of the counter-propagating probe pair: the odd-in-Omega
/// component of the one-way propagation phase, (phi(+Omega) - phi(-Omega))/2.
/// The rotation-independent dispersive phase is even in Omega and cancels.
inline double sagnac_phase_numeric(const LoopGeometry& loop, const ProbeField& probe,
                                   const AtomSpecies& species, double omega,
                                   const PropagationOptions& options = {}) {
    const PropagationResult forward =
        propagate_probe(loop, probe, species, omega, {1.0, 0.0}, options);
    const PropagationResult backward =
        propagate_probe(loop, probe, species, -omega, {1.0, 0.0}, options);
    return 0.5 * (forward.phase - backward.phase);
}

} // namespace sagnac
