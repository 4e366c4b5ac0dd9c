#pragma once

#include <cmath>
#include <limits>

#include "sagnac/absorption.hpp"
#include "sagnac/phase.hpp"
#include "sagnac/propagation.hpp"
#include "sagnac/validity.hpp"

namespace sagnac {

enum class OracleStatus {
    ok,             ///< inside validity, deviations within tolerance
    deviation,      ///< inside validity, tolerance exceeded (a failure)
    out_of_validity ///< flags failed; numeric comparison skipped
};

/// Closed form vs numerical integration of one loop configuration.
struct ComparisonReport {
    double phase_closed = 0.0;
    double phase_numeric = std::numeric_limits<double>::quiet_NaN();
    double phase_rel_dev = std::numeric_limits<double>::quiet_NaN();
    double kappa_l_closed = 0.0;
    double log_amplitude_numeric = std::numeric_limits<double>::quiet_NaN();
    double kappa_rel_dev = std::numeric_limits<double>::quiet_NaN();
    double error_estimate = 0.0;
    ValidityFlags flags;
    bool within_validity = false;
    OracleStatus status = OracleStatus::out_of_validity;
    double phase_tolerance = 0.0;
    double kappa_tolerance = 0.0;
};

/// Runs the envelope integration against the closed forms. Configurations
/// outside the validity flags report only the closed forms and are marked
/// out_of_validity without integrating: the comparison is meaningless there
/// and deep in the absorbing regime the integration can be arbitrarily stiff.
inline ComparisonReport compare_to_analytic(const LoopGeometry& loop, const ProbeField& probe,
                                            const AtomSpecies& species, double omega,
                                            const PropagationOptions& options = {},
                                            double phase_tolerance = 1e-3,
                                            double kappa_tolerance = 5e-2,
                                            double epsilon = 1e-2) {
    ComparisonReport r;
    r.phase_tolerance = phase_tolerance;
    r.kappa_tolerance = kappa_tolerance;
    r.phase_closed = sagnac_phase_hybrid(loop, omega, probe, species);
    const double omega_r = omega * loop.radius;
    for (const auto& seg : loop.segments) {
        r.kappa_l_closed += absorption_coefficient(seg, probe, species, AbsorptionMode::general);
        r.flags &= validity_check(seg, probe, species, omega_r, epsilon);
    }
    r.within_validity = r.flags.all();
    if (!r.within_validity) return r;

    const PropagationResult forward =
        propagate_probe(loop, probe, species, omega, {1.0, 0.0}, options);
    const PropagationResult backward =
        propagate_probe(loop, probe, species, -omega, {1.0, 0.0}, options);
    r.phase_numeric = 0.5 * (forward.phase - backward.phase);
    r.log_amplitude_numeric = forward.log_amplitude;
    r.error_estimate = 0.5 * (forward.error_estimate + backward.error_estimate);

    r.phase_rel_dev = r.phase_closed != 0.0
                          ? std::abs(r.phase_numeric - r.phase_closed) / std::abs(r.phase_closed)
                          : std::abs(r.phase_numeric);
    r.kappa_rel_dev = r.kappa_l_closed > 0.0
                          ? std::abs(r.log_amplitude_numeric + r.kappa_l_closed) / r.kappa_l_closed
                          : std::abs(r.log_amplitude_numeric);
    r.status = (r.phase_rel_dev <= phase_tolerance && r.kappa_rel_dev <= kappa_tolerance)
                   ? OracleStatus::ok
                   : OracleStatus::deviation;
    return r;
}

} // namespace sagnac
