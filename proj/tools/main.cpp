#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "brillouin/config.hpp"
#include "brillouin/errors.hpp"
#include "brillouin/fock.hpp"
#include "brillouin/sweep.hpp"
#include "brillouin/table.hpp"
#include "brillouin/verify.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;

struct CommonOptions {
    std::string config_path;
    std::optional<std::string> out_path;
    std::optional<std::string> format;
    std::optional<int> points;
    std::optional<double> min;
    std::optional<double> max;
    std::optional<int> truncation;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--config", opt.config_path, "scenario config file");
    cmd->add_option("--out", opt.out_path, "output path (default stdout)");
    cmd->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--points", opt.points, "sweep point count");
    cmd->add_option("--min", opt.min, "sweep lower bound");
    cmd->add_option("--max", opt.max, "sweep upper bound");
    cmd->add_option("--truncation", opt.truncation, "Fock truncation n_max");
}

brillouin::ScenarioConfig resolve(const CommonOptions& opt, bool thermal_range) {
    brillouin::ScenarioConfig cfg;
    if (!opt.config_path.empty()) cfg = brillouin::load_config(opt.config_path);
    brillouin::SweepRange& range = thermal_range ? cfg.thermal : cfg.sweep;
    if (opt.min) range.min = *opt.min;
    if (opt.max) range.max = *opt.max;
    if (opt.points) range.points = *opt.points;
    if (opt.truncation) cfg.n_max = *opt.truncation;
    if (opt.format) cfg.format = *opt.format;
    if (opt.out_path) cfg.out_path = *opt.out_path;
    brillouin::validate(cfg);
    return cfg;
}

void emit(const brillouin::Table& table, const brillouin::ScenarioConfig& cfg) {
    if (cfg.out_path.empty()) {
        brillouin::write_table(table, cfg.format, std::cout);
        return;
    }
    std::ofstream out(cfg.out_path);
    if (!out) throw brillouin::ConfigError("cannot open output path '" + cfg.out_path + "'");
    brillouin::write_table(table, cfg.format, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Photon-phonon entanglement in nanowire Brillouin scattering: "
        "detuning sweeps, state expansions, thermal tables, and oracle verification"};
    app.require_subcommand(1);

    CommonOptions stokes_opt, anti_opt, verify_opt, state_opt, thermal_opt;
    std::optional<double> state_r;
    std::string fock_dump_path;

    CLI::App* stokes = app.add_subcommand(
        "stokes-sweep", "Bogoliubov frequencies and fractions vs detuning");
    add_common(stokes, stokes_opt);

    CLI::App* anti = app.add_subcommand(
        "antistokes-sweep", "polariton frequencies and fractions vs detuning");
    add_common(anti, anti_opt);

    CLI::App* verify = app.add_subcommand(
        "verify", "run every closed-form vs Fock-oracle cross-check");
    add_common(verify, verify_opt);

    CLI::App* state = app.add_subcommand(
        "state", "squeezed-vacuum pair amplitudes c_n");
    add_common(state, state_opt);
    state->add_option("--r", state_r,
                      "squeeze parameter (default: derived from the configured operating point)");
    state->add_option("--fock-dump", fock_dump_path,
                      "also write the oracle-built state in index/real/imag format");

    CLI::App* thermal = app.add_subcommand(
        "thermal", "thermal phonon occupation over a temperature range");
    add_common(thermal, thermal_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (stokes->parsed()) {
            const auto cfg = resolve(stokes_opt, false);
            emit(brillouin::run_stokes_sweep(cfg), cfg);
        } else if (anti->parsed()) {
            const auto cfg = resolve(anti_opt, false);
            emit(brillouin::run_antistokes_sweep(cfg), cfg);
        } else if (verify->parsed()) {
            const auto cfg = resolve(verify_opt, false);
            const brillouin::VerifyReport report = brillouin::run_verify(cfg);
            if (cfg.out_path.empty()) {
                brillouin::print_report(report, std::cout);
            } else {
                std::ofstream out(cfg.out_path);
                if (!out) {
                    throw brillouin::ConfigError("cannot open output path '" + cfg.out_path +
                                                 "'");
                }
                brillouin::print_report(report, out);
            }
            if (!report.all_passed()) return kExitVerification;
        } else if (state->parsed()) {
            const auto cfg = resolve(state_opt, false);
            const double r =
                state_r ? *state_r : brillouin::diagonalize_stokes(cfg.stokes_at(0.0)).r;
            emit(brillouin::run_state_dump(r, cfg.n_max), cfg);
            if (!fock_dump_path.empty()) {
                const brillouin::fock::FockBasis basis{cfg.n_max};
                const auto squeeze = brillouin::fock::build_squeeze_operator(
                    r, cfg.n_max, brillouin::fock::SqueezeMethod::Exponential);
                const brillouin::fock::FockState psi{
                    basis, squeeze.entries * brillouin::fock::vacuum_state(basis).amplitudes};
                std::ofstream dump(fock_dump_path);
                if (!dump) {
                    throw brillouin::ConfigError("cannot open dump path '" + fock_dump_path +
                                                 "'");
                }
                brillouin::fock::write_state(psi, dump);
            }
        } else if (thermal->parsed()) {
            const auto cfg = resolve(thermal_opt, true);
            emit(brillouin::run_thermal(cfg), cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
