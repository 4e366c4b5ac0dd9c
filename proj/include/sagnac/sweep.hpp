#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sagnac/comparison.hpp"
#include "sagnac/config.hpp"
#include "sagnac/report.hpp"

namespace sagnac {

inline std::string_view to_string(OracleStatus s) {
    switch (s) {
        case OracleStatus::ok: return "ok";
        case OracleStatus::deviation: return "deviation";
        default: return "skip";
    }
}

/// One evaluated grid point. The numeric-oracle fields stay NaN in analytic
/// mode and on rows outside the validity flags (status "skip").
struct SweepRow {
    double swept_value = 0.0;
    double xi = 0.0;
    double vgr_over_vrec = 0.0;
    double phase_optical = 0.0;
    double phase_hybrid = 0.0;
    double enhancement = 0.0;
    double kappa_l = 0.0;
    ValidityFlags flags;
    bool oracle = false;  ///< numeric-oracle columns engaged
    double phase_numeric = std::numeric_limits<double>::quiet_NaN();
    double phase_rel_dev = std::numeric_limits<double>::quiet_NaN();
    double log_amplitude = std::numeric_limits<double>::quiet_NaN();
    double kappa_rel_dev = std::numeric_limits<double>::quiet_NaN();
    OracleStatus oracle_status = OracleStatus::out_of_validity;
};

/// Oracle acceptance tolerances: relative phase deviation and relative
/// log-amplitude-vs-kappa-L deviation a validity-passing row must meet.
inline constexpr double oracle_phase_tolerance = 1e-3;
inline constexpr double oracle_kappa_tolerance = 5e-2;

/// Grid over the swept variable. Default bounds: xi in [1e-3, 10 c/v_rec],
/// temperature_ratio in [1, 1e6], eta in [0, 2] (from 1e-2 on a log scale).
/// Both endpoints are hit exactly.
inline std::vector<double> sweep_grid(const RunConfig& cfg) {
    double lo, hi;
    if (cfg.sweep_min) {
        lo = *cfg.sweep_min;
        hi = *cfg.sweep_max;
    } else {
        switch (cfg.sweep_variable) {
            case SweepVariable::xi:
                lo = 1e-3;
                hi = 10.0 * tan2_theta_critical(probe_from(cfg), species_from(cfg));
                break;
            case SweepVariable::temperature_ratio:
                lo = 1.0;
                hi = 1e6;
                break;
            default:
                lo = cfg.sweep_scale == SweepScale::linear ? 0.0 : 1e-2;
                hi = 2.0;
                break;
        }
    }
    const int n = cfg.sweep_count;
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double frac = static_cast<double>(k) / (n - 1);
        grid[static_cast<std::size_t>(k)] = cfg.sweep_scale == SweepScale::logarithmic
                                                ? lo * std::pow(hi / lo, frac)
                                                : lo + (hi - lo) * frac;
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

namespace detail {

inline SweepRow evaluate_sweep_row(const RunConfig& rc, double swept, const AtomSpecies& species,
                                   const ProbeField& probe) {
    const LoopGeometry loop = loop_from(rc);
    const DerivedMediumQuantities q = derive_medium(loop.segments.front(), probe, species);

    SweepRow row;
    row.swept_value = swept;
    row.xi = q.xi;
    row.vgr_over_vrec = q.v_gr / q.v_rec;

    const SagnacReport rep = make_report(loop, rc.omega, probe, species, rc.absorption, rc.epsilon);
    row.phase_optical = rep.phase_optical;
    row.phase_hybrid = rep.phase_hybrid;
    row.enhancement = rep.enhancement;
    row.kappa_l = rep.kappa_l_total;
    row.flags = rep.flags;

    if (rc.mode != RunMode::analytic) {
        row.oracle = true;
        PropagationOptions options;
        options.quadrature_order = rc.quadrature_order;
        options.min_steps_per_segment = rc.steps_per_segment;
        options.rel_tol = rc.tolerance;
        const ComparisonReport cmp =
            compare_to_analytic(loop, probe, species, rc.omega, options, oracle_phase_tolerance,
                                oracle_kappa_tolerance, rc.epsilon);
        row.phase_numeric = cmp.phase_numeric;
        row.phase_rel_dev = cmp.phase_rel_dev;
        row.log_amplitude = cmp.log_amplitude_numeric;
        row.kappa_rel_dev = cmp.kappa_rel_dev;
        row.oracle_status = cmp.status;
    }
    return row;
}

} // namespace detail

/// Evaluates the configured sweep at the configured temperature_ratio. Row
/// order follows the grid; identical configs produce identical rows.
inline std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
    const AtomSpecies species = species_from(cfg);
    const ProbeField probe = probe_from(cfg);
    if (segment_from(cfg).is_vacuum())
        throw std::invalid_argument("sweep requires a medium (nonzero density or opacity)");

    const std::vector<double> grid = sweep_grid(cfg);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double value : grid) {
        RunConfig rc = cfg;
        switch (cfg.sweep_variable) {
            case SweepVariable::xi:
                rc.xi = value;
                rc.control_rabi.reset();
                break;
            case SweepVariable::temperature_ratio:
                rc.temperature_ratio = value;
                break;
            default:
                rc.eta = value;
                break;
        }
        rows.push_back(detail::evaluate_sweep_row(rc, value, species, probe));
    }
    return rows;
}

struct SweepBlock {
    double temperature_ratio = 0.0;
    std::vector<SweepRow> rows;
};

/// One block per configured temperature; a config without a temperatures
/// list yields a single block at its temperature_ratio.
inline std::vector<SweepBlock> run_sweep_blocks(const RunConfig& cfg) {
    if (cfg.temperatures.empty()) return {{cfg.temperature_ratio, run_sweep(cfg)}};
    std::vector<SweepBlock> blocks;
    blocks.reserve(cfg.temperatures.size());
    for (double t : cfg.temperatures) {
        RunConfig rc = cfg;
        rc.temperature_ratio = t;
        rc.temperatures.clear();
        blocks.push_back({t, run_sweep(rc)});
    }
    return blocks;
}

inline constexpr std::string_view sweep_csv_header =
    "swept_var,xi,vgr_over_vrec,phase_optical_rad,phase_hybrid_rad,enhancement,kappa_L,valid";
inline constexpr std::string_view sweep_csv_oracle_header =
    "phase_numeric_rad,phase_rel_dev,log_amplitude,kappa_rel_dev,oracle_status";

/// Renders rows as CSV: scientific notation with 9 significant digits, fixed
/// column order, no timestamps, so equal rows give byte-identical text.
inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    const bool oracle = !rows.empty() && rows.front().oracle;
    std::string out{sweep_csv_header};
    if (oracle) {
        out += ',';
        out += sweep_csv_oracle_header;
    }
    out += '\n';
    char buf[40];
    const auto cell = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.8e", v);
        out += buf;
        out += ',';
    };
    for (const SweepRow& r : rows) {
        cell(r.swept_value);
        cell(r.xi);
        cell(r.vgr_over_vrec);
        cell(r.phase_optical);
        cell(r.phase_hybrid);
        cell(r.enhancement);
        cell(r.kappa_l);
        out += r.flags.all() ? '1' : '0';
        if (oracle) {
            out += ',';
            cell(r.phase_numeric);
            cell(r.phase_rel_dev);
            cell(r.log_amplitude);
            cell(r.kappa_rel_dev);
            out += to_string(r.oracle_status);
        }
        out += '\n';
    }
    return out;
}

/// Multi-block text form for a single stream: each block is preceded by a
/// "# temperature_ratio = <r>" comment and separated by a blank line.
inline std::string sweep_blocks_csv(const std::vector<SweepBlock>& blocks) {
    if (blocks.size() == 1) return sweep_csv(blocks.front().rows);
    std::string out;
    char buf[40];
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i != 0) out += '\n';
        std::snprintf(buf, sizeof buf, "%.17g", blocks[i].temperature_ratio);
        out += "# temperature_ratio = ";
        out += buf;
        out += '\n';
        out += sweep_csv(blocks[i].rows);
    }
    return out;
}

} // namespace sagnac
