#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sagnac/absorption.hpp"
#include "sagnac/medium.hpp"
#include "sagnac/types.hpp"
#include "sagnac/units.hpp"

namespace sagnac {

enum class SweepVariable { xi, temperature_ratio, eta };
enum class SweepScale { logarithmic, linear };
enum class RunMode { analytic, oracle, both };

inline std::string_view to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::xi: return "xi";
        case SweepVariable::temperature_ratio: return "temperature_ratio";
        default: return "eta";
    }
}

inline std::string_view to_string(SweepScale s) {
    return s == SweepScale::logarithmic ? "log" : "linear";
}

inline std::string_view to_string(RunMode m) {
    switch (m) {
        case RunMode::analytic: return "analytic";
        case RunMode::oracle: return "oracle";
        default: return "both";
    }
}

inline std::string_view to_string(AbsorptionMode m) {
    return m == AbsorptionMode::general ? "general" : "fig3";
}

inline SweepVariable sweep_variable_from(std::string_view s) {
    if (s == "xi") return SweepVariable::xi;
    if (s == "temperature_ratio") return SweepVariable::temperature_ratio;
    if (s == "eta") return SweepVariable::eta;
    throw std::invalid_argument("\"" + std::string(s) +
                                "\" is not a sweep variable (xi|temperature_ratio|eta)");
}

inline SweepScale sweep_scale_from(std::string_view s) {
    if (s == "log") return SweepScale::logarithmic;
    if (s == "linear") return SweepScale::linear;
    throw std::invalid_argument("\"" + std::string(s) + "\" is not a sweep scale (log|linear)");
}

inline RunMode run_mode_from(std::string_view s) {
    if (s == "analytic") return RunMode::analytic;
    if (s == "oracle") return RunMode::oracle;
    if (s == "both") return RunMode::both;
    throw std::invalid_argument("\"" + std::string(s) + "\" is not a mode (analytic|oracle|both)");
}

inline AbsorptionMode absorption_mode_from(std::string_view s) {
    if (s == "general") return AbsorptionMode::general;
    if (s == "fig3") return AbsorptionMode::fig3;
    throw std::invalid_argument("\"" + std::string(s) +
                                "\" is not an absorption mode (general|fig3)");
}

/// Flat run description. Dimensioned fields are stored in SI; the text form
/// accepts unit-suffixed strings (see parse_config). Exactly one of
/// {control_rabi, xi} and one of {density, opacity} is set after
/// finalize_config; the unset partner is derived at build time.
struct RunConfig {
    // species
    double mass = 23.0 * constants.amu;  ///< [kg]
    double dipole_moment = 2.1e-29;      ///< [C m]
    double cross_section = 0.0;          ///< [m^2], velocity-changing collisions
    // probe
    double wavelength = 500e-9;  ///< [m]
    double beam_area = 1e-6;     ///< [m^2]
    // loop and medium
    double radius = 0.1;                  ///< [m]
    std::optional<double> medium_length;  ///< [m]; empty = medium fills the loop
    std::optional<double> density;        ///< [m^-3]
    std::optional<double> opacity;        ///< resonant optical depth alpha
    double gamma = 1e7;                   ///< [rad/s]
    std::optional<double> control_rabi;   ///< [rad/s]
    std::optional<double> xi;             ///< slow-down parameter
    double eta = 1.0;                     ///< momentum-transfer parameter
    double temperature_ratio = 0.0;       ///< T / T_rec
    std::vector<double> temperatures;     ///< extra T / T_rec blocks for sweeps
    double omega = 7.29e-5;               ///< rotation rate [rad/s]
    // sweep grid
    SweepVariable sweep_variable = SweepVariable::xi;
    SweepScale sweep_scale = SweepScale::logarithmic;
    std::optional<double> sweep_min;  ///< empty = variable-specific default
    std::optional<double> sweep_max;
    int sweep_count = 200;
    // execution
    RunMode mode = RunMode::analytic;
    AbsorptionMode absorption = AbsorptionMode::general;
    std::string output;  ///< empty = standard output
    int quadrature_order = 64;
    int steps_per_segment = 512;
    double tolerance = 1e-9;
    double epsilon = 1e-2;     ///< validity "much less than" threshold
    double kappa_budget = 1.0;  ///< absorption budget for design points

    bool operator==(const RunConfig&) const = default;
};

namespace detail {

inline void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

} // namespace detail

/// Resolves the one-of-pair defaults and enforces every field constraint.
/// Called by parse_config; call it directly on hand-built configs.
inline void finalize_config(RunConfig& cfg) {
    using detail::require;
    if (cfg.control_rabi && cfg.xi)
        throw std::invalid_argument("control_rabi and xi are mutually exclusive; set exactly one");
    if (!cfg.control_rabi && !cfg.xi) cfg.xi = 1.0;
    if (cfg.density && cfg.opacity)
        throw std::invalid_argument("density and opacity are mutually exclusive; set exactly one");
    if (!cfg.density && !cfg.opacity) cfg.opacity = 100.0;

    require(cfg.mass > 0.0, "mass must be > 0");
    require(cfg.dipole_moment > 0.0, "dipole_moment must be > 0");
    require(cfg.cross_section >= 0.0, "cross_section must be >= 0");
    require(cfg.wavelength > 0.0, "wavelength must be > 0");
    require(cfg.beam_area > 0.0, "beam_area must be > 0");
    require(cfg.radius > 0.0, "radius must be > 0");
    if (cfg.medium_length) require(*cfg.medium_length > 0.0, "medium_length must be > 0");
    if (cfg.density) require(*cfg.density >= 0.0, "density must be >= 0");
    if (cfg.opacity) require(*cfg.opacity >= 0.0, "opacity must be >= 0");
    require(cfg.gamma > 0.0, "gamma must be > 0");
    if (cfg.control_rabi) require(*cfg.control_rabi > 0.0, "control_rabi must be > 0");
    if (cfg.xi) require(*cfg.xi > 0.0, "xi must be > 0");
    require(cfg.eta >= 0.0, "eta must satisfy eta >= 0 (no backward momentum transfer)");
    require(cfg.eta <= 2.0, "eta must satisfy eta <= 2 (counter-propagating control limit)");
    require(cfg.temperature_ratio >= 0.0, "temperature_ratio must be >= 0");
    for (double t : cfg.temperatures)
        require(t >= 0.0, "temperatures entries must be >= 0");
    require(cfg.sweep_count >= 2, "sweep_count must be >= 2");
    if (cfg.sweep_min.has_value() != cfg.sweep_max.has_value())
        throw std::invalid_argument("sweep_min and sweep_max must be given together");
    if (cfg.sweep_min) {
        require(*cfg.sweep_min < *cfg.sweep_max, "sweep_min must be < sweep_max");
        if (cfg.sweep_scale == SweepScale::logarithmic)
            require(*cfg.sweep_min > 0.0, "sweep_min must be > 0 on a log scale");
    }
    if (cfg.sweep_variable == SweepVariable::temperature_ratio && !cfg.temperatures.empty())
        throw std::invalid_argument(
            "temperatures cannot be combined with sweep_variable = temperature_ratio");
    require(cfg.quadrature_order >= 1, "quadrature_order must be >= 1");
    require(cfg.steps_per_segment >= 1, "steps_per_segment must be >= 1");
    require(cfg.tolerance > 0.0 && cfg.tolerance < 1.0, "tolerance must be in (0, 1)");
    require(cfg.epsilon > 0.0, "epsilon must be > 0");
    require(cfg.kappa_budget > 0.0, "kappa_budget must be > 0");
}

namespace detail {

inline std::string_view unquote(std::string_view v) {
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
        v.remove_prefix(1);
        v.remove_suffix(1);
    }
    return v;
}

inline int parse_positive_int(std::string_view v) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw std::invalid_argument("\"" + std::string(v) + "\" is not an integer");
    return out;
}

inline std::vector<double> parse_number_list(std::string_view v) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= v.size()) {
        std::size_t comma = v.find(',', start);
        if (comma == std::string_view::npos) comma = v.size();
        const std::string_view item = trim(v.substr(start, comma - start));
        if (item.empty()) throw std::invalid_argument("empty entry in number list");
        out.push_back(parse_quantity(item, ""));
        start = comma + 1;
    }
    return out;
}

inline void apply_config_key(RunConfig& cfg, std::string_view key, std::string_view value) {
    const auto number = [&] { return parse_quantity(value, ""); };
    if (key == "mass") cfg.mass = parse_quantity(value, "kg");
    else if (key == "dipole_moment") cfg.dipole_moment = parse_quantity(value, "C m");
    else if (key == "cross_section") cfg.cross_section = parse_quantity(value, "m^2");
    else if (key == "wavelength") cfg.wavelength = parse_quantity(value, "m");
    else if (key == "beam_area") cfg.beam_area = parse_quantity(value, "m^2");
    else if (key == "radius") cfg.radius = parse_quantity(value, "m");
    else if (key == "medium_length") {
        if (value == "full") cfg.medium_length.reset();
        else cfg.medium_length = parse_quantity(value, "m");
    } else if (key == "density") cfg.density = parse_quantity(value, "m^-3");
    else if (key == "opacity") cfg.opacity = number();
    else if (key == "gamma") cfg.gamma = parse_quantity(value, "rad/s");
    else if (key == "control_rabi") cfg.control_rabi = parse_quantity(value, "rad/s");
    else if (key == "xi") cfg.xi = number();
    else if (key == "eta") cfg.eta = number();
    else if (key == "temperature_ratio") cfg.temperature_ratio = number();
    else if (key == "temperatures") cfg.temperatures = parse_number_list(value);
    else if (key == "omega") cfg.omega = parse_quantity(value, "rad/s");
    else if (key == "sweep_variable") cfg.sweep_variable = sweep_variable_from(value);
    else if (key == "sweep_scale") cfg.sweep_scale = sweep_scale_from(value);
    else if (key == "sweep_min") {
        if (value == "auto") cfg.sweep_min.reset();
        else cfg.sweep_min = number();
    } else if (key == "sweep_max") {
        if (value == "auto") cfg.sweep_max.reset();
        else cfg.sweep_max = number();
    } else if (key == "sweep_count") cfg.sweep_count = parse_positive_int(value);
    else if (key == "mode") cfg.mode = run_mode_from(value);
    else if (key == "absorption") cfg.absorption = absorption_mode_from(value);
    else if (key == "output") cfg.output = std::string(value);
    else if (key == "quadrature_order") cfg.quadrature_order = parse_positive_int(value);
    else if (key == "steps_per_segment") cfg.steps_per_segment = parse_positive_int(value);
    else if (key == "tolerance") cfg.tolerance = number();
    else if (key == "epsilon") cfg.epsilon = number();
    else if (key == "kappa_budget") cfg.kappa_budget = number();
    else throw std::invalid_argument("unknown key \"" + std::string(key) + "\"");
}

} // namespace detail

/// Parses the line-oriented "key = value" document. '#' starts a comment
/// outside quotes; values may be wrapped in one layer of double quotes;
/// duplicate and unknown keys are rejected.
inline RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::set<std::string, std::less<>> seen;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        bool in_quotes = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_quotes = !in_quotes;
            else if (line[i] == '#' && !in_quotes) {
                line = line.substr(0, i);
                break;
            }
        }
        line = detail::trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        const std::string context = "config line " + std::to_string(line_no);
        if (eq == std::string_view::npos)
            throw std::invalid_argument(context + ": expected \"key = value\"");
        const std::string_view key = detail::trim(line.substr(0, eq));
        const std::string_view value = detail::unquote(detail::trim(line.substr(eq + 1)));
        if (key.empty()) throw std::invalid_argument(context + ": missing key");
        if (!seen.insert(std::string(key)).second)
            throw std::invalid_argument(context + ": duplicate key \"" + std::string(key) + "\"");
        try {
            detail::apply_config_key(cfg, key, value);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(context + ", key \"" + std::string(key) +
                                        "\": " + e.what());
        }
    }
    finalize_config(cfg);
    return cfg;
}

/// Canonical text form: every effective key in fixed order, doubles printed
/// with %.17g so the document re-parses to an equal RunConfig.
inline std::string echo_config(const RunConfig& cfg) {
    std::string out;
    const auto num = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    const auto line = [&out](std::string_view key, std::string_view value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    const auto qty = [&](std::string_view key, double v, std::string_view unit) {
        line(key, '"' + num(v) + ' ' + std::string(unit) + '"');
    };
    qty("mass", cfg.mass, "kg");
    qty("dipole_moment", cfg.dipole_moment, "C m");
    qty("cross_section", cfg.cross_section, "m^2");
    qty("wavelength", cfg.wavelength, "m");
    qty("beam_area", cfg.beam_area, "m^2");
    qty("radius", cfg.radius, "m");
    if (cfg.medium_length) qty("medium_length", *cfg.medium_length, "m");
    else line("medium_length", "full");
    if (cfg.density) qty("density", *cfg.density, "m^-3");
    if (cfg.opacity) line("opacity", num(*cfg.opacity));
    qty("gamma", cfg.gamma, "rad/s");
    if (cfg.control_rabi) qty("control_rabi", *cfg.control_rabi, "rad/s");
    if (cfg.xi) line("xi", num(*cfg.xi));
    line("eta", num(cfg.eta));
    line("temperature_ratio", num(cfg.temperature_ratio));
    if (!cfg.temperatures.empty()) {
        std::string joined;
        for (double t : cfg.temperatures) {
            if (!joined.empty()) joined += ", ";
            joined += num(t);
        }
        line("temperatures", joined);
    }
    qty("omega", cfg.omega, "rad/s");
    line("sweep_variable", to_string(cfg.sweep_variable));
    line("sweep_scale", to_string(cfg.sweep_scale));
    line("sweep_min", cfg.sweep_min ? num(*cfg.sweep_min) : "auto");
    line("sweep_max", cfg.sweep_max ? num(*cfg.sweep_max) : "auto");
    line("sweep_count", std::to_string(cfg.sweep_count));
    line("mode", to_string(cfg.mode));
    line("absorption", to_string(cfg.absorption));
    if (!cfg.output.empty()) line("output", '"' + cfg.output + '"');
    line("quadrature_order", std::to_string(cfg.quadrature_order));
    line("steps_per_segment", std::to_string(cfg.steps_per_segment));
    line("tolerance", num(cfg.tolerance));
    line("epsilon", num(cfg.epsilon));
    line("kappa_budget", num(cfg.kappa_budget));
    return out;
}

struct PresetInfo {
    std::string_view name;
    std::string_view summary;
};

inline constexpr std::array<PresetInfo, 3> preset_catalog{{
    {"fig2", "polariton enhancement vs xi, cold uniform medium filling the loop"},
    {"fig3-left", "thermal absorption vs xi, opacity 100, 100 um trapped sample"},
    {"fig3-right", "thermal absorption vs xi, opacity 10, 1 cm vapor cell"},
}};

inline RunConfig preset_config(std::string_view name) {
    RunConfig cfg;
    if (name == "fig2") {
        // defaults already describe the cold uniform full loop; the xi grid
        // bounds stay automatic (1e-3 .. 10 c/v_rec)
    } else if (name == "fig3-left") {
        cfg.opacity = 100.0;
        cfg.medium_length = 100e-6;
        cfg.temperature_ratio = 1.0;
        cfg.temperatures = {1.0, 1e3, 1e6};
        cfg.absorption = AbsorptionMode::fig3;
        cfg.sweep_min = 1.0;
        cfg.sweep_max = 1e6;
    } else if (name == "fig3-right") {
        cfg.opacity = 10.0;
        cfg.medium_length = 1e-2;
        cfg.temperature_ratio = 1.0;
        cfg.temperatures = {1.0, 1e3, 1e6};
        cfg.absorption = AbsorptionMode::fig3;
        cfg.sweep_min = 1e2;
        cfg.sweep_max = 1e8;
    } else {
        std::string names;
        for (const PresetInfo& p : preset_catalog) {
            if (!names.empty()) names += "|";
            names += p.name;
        }
        throw std::invalid_argument("unknown preset \"" + std::string(name) + "\" (" + names +
                                    ")");
    }
    finalize_config(cfg);
    return cfg;
}

inline AtomSpecies species_from(const RunConfig& cfg) {
    return {cfg.mass, cfg.dipole_moment, cfg.cross_section};
}

inline ProbeField probe_from(const RunConfig& cfg) {
    return {cfg.wavelength, cfg.beam_area};
}

inline double full_medium_length(const RunConfig& cfg) {
    return cfg.medium_length ? *cfg.medium_length : two_pi * cfg.radius;
}

/// Materializes the medium segment: density from opacity (or given directly)
/// and the control Rabi frequency from xi via |Omega_c|^2 = g^2 n xi / S.
/// Zero density or opacity yields a vacuum segment.
inline MediumSegment segment_from(const RunConfig& cfg) {
    const AtomSpecies species = species_from(cfg);
    const ProbeField probe = probe_from(cfg);
    const double g = coupling_constant(species, probe);
    const double length = full_medium_length(cfg);
    const double n =
        cfg.density ? *cfg.density : *cfg.opacity * cfg.gamma * constants.c / (g * g * length);
    if (n == 0.0) return vacuum_segment(length);

    MediumSegment seg;
    seg.length = length;
    seg.density = n;
    seg.gamma = cfg.gamma;
    seg.temperature_ratio = cfg.temperature_ratio;
    seg.control.eta = cfg.eta;
    const double rabi = cfg.control_rabi
                            ? *cfg.control_rabi
                            : g * std::sqrt(n * *cfg.xi / tan2_theta_critical(probe, species));
    seg.control.rabi_frequency = {rabi, 0.0};
    return seg;
}

/// Builds the loop: a medium shorter than the circumference is padded with
/// vacuum; one matching it fills the loop uniformly.
inline LoopGeometry loop_from(const RunConfig& cfg) {
    MediumSegment seg = segment_from(cfg);
    const double full = two_pi * cfg.radius;
    if (seg.length > full * (1.0 + 1e-12))
        throw std::invalid_argument("medium_length exceeds the loop circumference 2 pi radius");
    if (seg.length >= full * (1.0 - 1e-12)) {
        seg.length = full;
        return uniform_loop(cfg.radius, seg);
    }
    return loop_with_vacuum_filler(cfg.radius, {seg});
}

} // namespace sagnac
