#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sagnac/sagnac.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string preset;
    std::string output;
    std::string mode;
    std::string absorption;
    int quadrature_order = 0;
    double tolerance = 0.0;
    bool echo = false;

    CLI::App* sub = nullptr;
};

void add_common_options(CLI::App* sub, CommonArgs& args) {
    args.sub = sub;
    CLI::Option* config =
        sub->add_option("--config", args.config_path, "path to a key = value run description");
    CLI::Option* preset = sub->add_option("--preset", args.preset,
                                          "built-in run description: fig2|fig3-left|fig3-right");
    config->excludes(preset);
    preset->excludes(config);
    sub->add_option("--output", args.output, "write results to this path (default: stdout)");
    sub->add_option("--mode", args.mode, "analytic|oracle|both");
    sub->add_option("--absorption", args.absorption, "closed absorption form: general|fig3");
    sub->add_option("--quadrature-order", args.quadrature_order,
                    "velocity classes per medium segment");
    sub->add_option("--tolerance", args.tolerance, "integrator relative tolerance");
    sub->add_flag("--echo-config", args.echo,
                  "print the effective configuration in canonical form and exit");
}

sagnac::RunConfig load_config(const CommonArgs& args) {
    sagnac::RunConfig cfg;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw std::runtime_error("cannot open config file \"" + args.config_path + "\"");
        std::ostringstream text;
        text << in.rdbuf();
        cfg = sagnac::parse_config(text.str());
    } else if (!args.preset.empty()) {
        cfg = sagnac::preset_config(args.preset);
    } else {
        throw std::runtime_error("one of --config or --preset is required");
    }
    if (args.sub->count("--mode")) cfg.mode = sagnac::run_mode_from(args.mode);
    if (args.sub->count("--absorption"))
        cfg.absorption = sagnac::absorption_mode_from(args.absorption);
    if (args.sub->count("--output")) cfg.output = args.output;
    if (args.sub->count("--quadrature-order")) cfg.quadrature_order = args.quadrature_order;
    if (args.sub->count("--tolerance")) cfg.tolerance = args.tolerance;
    sagnac::finalize_config(cfg);
    return cfg;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
    out << text;
}

/// out.csv -> out.T<ratio>.csv; extensionless paths get the suffix appended.
std::string block_path(const std::string& base, double ratio) {
    const std::string tag = ".T" + format_number(ratio);
    const std::size_t dot = base.find_last_of('.');
    const std::size_t slash = base.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return base + tag;
    return base.substr(0, dot) + tag + base.substr(dot);
}

int run_phase(const sagnac::RunConfig& cfg) {
    const sagnac::AtomSpecies species = sagnac::species_from(cfg);
    const sagnac::ProbeField probe = sagnac::probe_from(cfg);
    const sagnac::SagnacReport rep = sagnac::make_report(
        sagnac::loop_from(cfg), cfg.omega, probe, species, cfg.absorption, cfg.epsilon);

    std::string text;
    text += "phase_optical_rad = " + format_number(rep.phase_optical) + "\n";
    text += "phase_hybrid_rad = " + format_number(rep.phase_hybrid) + "\n";
    text += "enhancement = " + format_number(rep.enhancement) + "\n";
    text += "kappa_L = " + format_number(rep.kappa_l_total) + "\n";
    text += std::string("valid = ") + (rep.flags.all() ? "1" : "0") + "\n";
    const std::array<bool, 5> flags = sagnac::as_array(rep.flags);
    for (std::size_t i = 0; i < flags.size(); ++i)
        text += std::string(sagnac::validity_flag_names[i]) + " = " + (flags[i] ? "1" : "0") +
                "\n";
    write_text(cfg.output, text);
    return 0;
}

int run_sweep_command(const sagnac::RunConfig& cfg) {
    const std::vector<sagnac::SweepBlock> blocks = sagnac::run_sweep_blocks(cfg);
    if (cfg.output.empty() || blocks.size() == 1) {
        write_text(cfg.output, sagnac::sweep_blocks_csv(blocks));
        return 0;
    }
    for (const sagnac::SweepBlock& block : blocks)
        write_text(block_path(cfg.output, block.temperature_ratio),
                   sagnac::sweep_csv(block.rows));
    return 0;
}

int run_design(const sagnac::RunConfig& cfg) {
    const sagnac::DesignReport r = sagnac::design_point(cfg);
    std::string text;
    text += "kappa_budget = " + format_number(r.kappa_budget) + "\n";
    text += "xi_min_absorption = " + format_number(r.xi_min_absorption) + "\n";
    text += "vgr_min_absorption_over_vrec = " + format_number(r.vgr_min_absorption_over_vrec) +
            "\n";
    text += "vgr_min_collisions_over_vrec = " + format_number(r.vgr_min_collisions_over_vrec) +
            "\n";
    text += std::string("binding = ") + (r.collisions_binding ? "collisions" : "absorption") +
            "\n";
    text += "xi_optimum = " + format_number(r.xi_optimum) + "\n";
    text += "enhancement_at_optimum = " + format_number(r.enhancement_at_optimum) + "\n";
    text += std::string("feasible = ") + (r.feasible ? "yes" : "no") + "\n";
    write_text(cfg.output, text);
    return 0;
}

int run_oracle_check(sagnac::RunConfig cfg) {
    if (cfg.mode == sagnac::RunMode::analytic) cfg.mode = sagnac::RunMode::oracle;
    const std::vector<sagnac::SweepBlock> blocks = sagnac::run_sweep_blocks(cfg);

    std::size_t total = 0, passed = 0, deviations = 0, skipped = 0;
    for (const sagnac::SweepBlock& block : blocks)
        for (const sagnac::SweepRow& row : block.rows) {
            ++total;
            switch (row.oracle_status) {
                case sagnac::OracleStatus::ok: ++passed; break;
                case sagnac::OracleStatus::deviation: ++deviations; break;
                default: ++skipped; break;
            }
        }

    if (cfg.output.empty() || blocks.size() == 1)
        write_text(cfg.output, sagnac::sweep_blocks_csv(blocks));
    else
        for (const sagnac::SweepBlock& block : blocks)
            write_text(block_path(cfg.output, block.temperature_ratio),
                       sagnac::sweep_csv(block.rows));

    std::fprintf(stderr,
                 "oracle-check: %zu rows, %zu within tolerance, %zu deviations, %zu skipped "
                 "(outside validity)\n",
                 total, passed, deviations, skipped);
    return deviations == 0 ? 0 : 1;
}

int run_presets() {
    for (const sagnac::PresetInfo& p : sagnac::preset_catalog)
        std::printf("%-12s %s\n", std::string(p.name).c_str(), std::string(p.summary).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid light and matter-wave ring gyroscope model"};
    app.require_subcommand(1);

    CommonArgs phase_args, sweep_args, design_args, oracle_args;
    CLI::App* phase = app.add_subcommand(
        "phase", "closed-form phases, enhancement, absorption and validity for one run");
    add_common_options(phase, phase_args);
    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep as CSV");
    add_common_options(sweep, sweep_args);
    CLI::App* design =
        app.add_subcommand("design", "slow-down limits and enhancement at the feasible optimum");
    add_common_options(design, design_args);
    CLI::App* oracle = app.add_subcommand(
        "oracle-check", "integrate the envelope and compare to the closed forms; "
                        "exit 1 on any in-validity deviation");
    add_common_options(oracle, oracle_args);
    app.add_subcommand("presets", "list the built-in run descriptions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("presets")) return run_presets();

        const CommonArgs& args = app.got_subcommand(phase)    ? phase_args
                                 : app.got_subcommand(sweep)  ? sweep_args
                                 : app.got_subcommand(design) ? design_args
                                                              : oracle_args;
        const sagnac::RunConfig cfg = load_config(args);
        if (args.echo) {
            std::cout << sagnac::echo_config(cfg);
            return 0;
        }
        if (app.got_subcommand(phase)) return run_phase(cfg);
        if (app.got_subcommand(sweep)) return run_sweep_command(cfg);
        if (app.got_subcommand(design)) return run_design(cfg);
        return run_oracle_check(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
