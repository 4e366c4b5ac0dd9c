#pragma once

#include <cmath>
#include <limits>

#include "sagnac/absorption.hpp"
#include "sagnac/phase.hpp"
#include "sagnac/validity.hpp"

namespace sagnac {

/// Summary of one loop configuration at one rotation rate.
struct SagnacReport {
    double phase_optical = 0.0;  ///< [rad]
    double phase_hybrid = 0.0;   ///< [rad]
    double enhancement = 0.0;    ///< hybrid/optical; NaN when optical = 0
    double kappa_l_total = 0.0;  ///< summed over medium segments
    ValidityFlags flags;         ///< AND over segments
};

inline SagnacReport make_report(const LoopGeometry& loop, double omega, const ProbeField& probe,
                                const AtomSpecies& species,
                                AbsorptionMode mode = AbsorptionMode::general,
                                double epsilon = 1e-2) {
    validate(loop);
    validate(probe);
    validate(species);
    SagnacReport r;
    r.phase_optical = sagnac_phase_optical(loop, omega, probe);
    r.phase_hybrid = sagnac_phase_hybrid(loop, omega, probe, species);
    r.enhancement = r.phase_optical != 0.0 ? r.phase_hybrid / r.phase_optical
                                           : std::numeric_limits<double>::quiet_NaN();
    const double omega_r = omega * loop.radius;
    for (const auto& seg : loop.segments) {
        r.kappa_l_total += absorption_coefficient(seg, probe, species, mode);
        r.flags &= validity_check(seg, probe, species, omega_r, epsilon);
    }
    return r;
}

} // namespace sagnac
