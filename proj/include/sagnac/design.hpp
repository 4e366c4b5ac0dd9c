#pragma once

#include <algorithm>
#include <stdexcept>

#include "sagnac/absorption.hpp"
#include "sagnac/config.hpp"
#include "sagnac/phase.hpp"

namespace sagnac {

/// Slowdown limits for one medium: how far xi (equivalently v_gr) can be
/// lowered before thermal absorption eats the probe or velocity-changing
/// collisions scramble the sample, and the enhancement still reachable.
struct DesignReport {
    double kappa_budget = 1.0;
    double xi_min_absorption = 0.0;           ///< kappa L = budget inverted for xi
    double vgr_min_absorption_over_vrec = 0.0;  ///< xi_min + eta
    double vgr_min_collisions_over_vrec = 0.0;  ///< L n sigma sqrt(T/T_rec)
    bool collisions_binding = false;
    double xi_optimum = 0.0;
    double enhancement_at_optimum = 1.0;
    bool feasible = true;  ///< collision bound below c/v_rec

    bool operator==(const DesignReport&) const = default;
};

inline DesignReport design_point(const RunConfig& cfg) {
    const AtomSpecies species = species_from(cfg);
    const ProbeField probe = probe_from(cfg);
    const MediumSegment seg = segment_from(cfg);
    if (seg.is_vacuum())
        throw std::invalid_argument("design_point requires a medium (nonzero density or opacity)");

    DesignReport r;
    r.kappa_budget = cfg.kappa_budget;
    r.xi_min_absorption =
        min_xi_for_absorption(seg, probe, species, cfg.kappa_budget, cfg.absorption);
    r.vgr_min_absorption_over_vrec = r.xi_min_absorption + cfg.eta;
    r.vgr_min_collisions_over_vrec = collision_limited_vgr_min(seg, species);
    r.collisions_binding = r.vgr_min_collisions_over_vrec > r.vgr_min_absorption_over_vrec;
    r.xi_optimum = std::max(r.xi_min_absorption, r.vgr_min_collisions_over_vrec - cfg.eta);

    const double tan2_crit = tan2_theta_critical(probe, species);
    r.enhancement_at_optimum = (r.xi_optimum == 0.0 && cfg.eta == 0.0)
                                   ? 1.0
                                   : enhancement_uniform(r.xi_optimum, cfg.eta, tan2_crit);
    r.feasible = r.vgr_min_collisions_over_vrec <= tan2_crit;
    return r;
}

} // namespace sagnac
