#include "brillouin/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "brillouin/errors.hpp"

namespace brillouin {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

Real parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const Real v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for '" + key + "': '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    const Real v = parse_real(key, value);
    if (v != std::floor(v)) throw ConfigError("config: '" + key + "' must be an integer");
    return static_cast<int>(v);
}

}  // namespace

ModelParams ScenarioConfig::model() const {
    ModelParams m;
    m.branch1 = {omega1_ghz, v_g_ghz_per_k};
    m.branch2 = {omega2_ghz, v_g_ghz_per_k};
    m.phonon = {phonon_omega_ghz};
    m.drive = {n_p_in_per_s, u_mhz * 1e6, pump_omega_hz, pump_k, 2};
    m.couplings = {Complex(g_s_mhz * 1e-3, 0.0), Complex(g_as_mhz * 1e-3, 0.0)};
    return m;
}

PumpField ScenarioConfig::pump_field() const { return pump_steady_state(model().drive); }

Real ScenarioConfig::f_s_ghz() const {
    return std::abs(effective_coupling(model().couplings.g_s, pump_field()));
}

Complex ScenarioConfig::f_as_ghz() const {
    return effective_coupling(model().couplings.g_as, pump_field());
}

EnvironmentParams ScenarioConfig::environment() const {
    return {temperature_k, phonon_omega_ghz * 1e9, gamma_phonon_mhz * 1e6,
            gamma_photon_mhz * 1e6};
}

StokesParams ScenarioConfig::stokes_at(Real delta_s_ghz) const {
    return {phonon_omega_ghz + 2.0 * delta_s_ghz, phonon_omega_ghz, f_s_ghz()};
}

AntiStokesParams ScenarioConfig::antistokes_at(Real delta_as_ghz) const {
    return {phonon_omega_ghz + 2.0 * delta_as_ghz, phonon_omega_ghz, f_as_ghz()};
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");

    ScenarioConfig cfg;
    std::map<std::string, std::function<void(const std::string&, const std::string&)>> setters{
        {"branches.omega1_ghz", [&](const std::string& k, const std::string& v) { cfg.omega1_ghz = parse_real(k, v); }},
        {"branches.omega2_ghz", [&](const std::string& k, const std::string& v) { cfg.omega2_ghz = parse_real(k, v); }},
        {"branches.v_g_ghz_per_k", [&](const std::string& k, const std::string& v) { cfg.v_g_ghz_per_k = parse_real(k, v); }},
        {"phonon.omega_ghz", [&](const std::string& k, const std::string& v) { cfg.phonon_omega_ghz = parse_real(k, v); }},
        {"coupling.g_s_mhz", [&](const std::string& k, const std::string& v) { cfg.g_s_mhz = parse_real(k, v); }},
        {"coupling.g_as_mhz", [&](const std::string& k, const std::string& v) { cfg.g_as_mhz = parse_real(k, v); }},
        {"pump.n_p_in_per_s", [&](const std::string& k, const std::string& v) { cfg.n_p_in_per_s = parse_real(k, v); }},
        {"pump.u_mhz", [&](const std::string& k, const std::string& v) { cfg.u_mhz = parse_real(k, v); }},
        {"pump.omega_hz", [&](const std::string& k, const std::string& v) { cfg.pump_omega_hz = parse_real(k, v); }},
        {"pump.k", [&](const std::string& k, const std::string& v) { cfg.pump_k = parse_real(k, v); }},
        {"sweep.min_ghz", [&](const std::string& k, const std::string& v) { cfg.sweep.min = parse_real(k, v); }},
        {"sweep.max_ghz", [&](const std::string& k, const std::string& v) { cfg.sweep.max = parse_real(k, v); }},
        {"sweep.points", [&](const std::string& k, const std::string& v) { cfg.sweep.points = parse_int(k, v); }},
        {"thermal.min_k", [&](const std::string& k, const std::string& v) { cfg.thermal.min = parse_real(k, v); }},
        {"thermal.max_k", [&](const std::string& k, const std::string& v) { cfg.thermal.max = parse_real(k, v); }},
        {"thermal.points", [&](const std::string& k, const std::string& v) { cfg.thermal.points = parse_int(k, v); }},
        {"fock.n_max", [&](const std::string& k, const std::string& v) { cfg.n_max = parse_int(k, v); }},
        {"environment.temperature_k", [&](const std::string& k, const std::string& v) { cfg.temperature_k = parse_real(k, v); }},
        {"environment.gamma_phonon_mhz", [&](const std::string& k, const std::string& v) { cfg.gamma_phonon_mhz = parse_real(k, v); }},
        {"environment.gamma_photon_mhz", [&](const std::string& k, const std::string& v) { cfg.gamma_photon_mhz = parse_real(k, v); }},
        {"environment.strong_coupling_ratio", [&](const std::string& k, const std::string& v) { cfg.strong_coupling_ratio = parse_real(k, v); }},
        {"output.format", [&](const std::string&, const std::string& v) { cfg.format = v; }},
        {"output.path", [&](const std::string&, const std::string& v) { cfg.out_path = v; }},
    };

    std::string section;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("config: unterminated section at line " + std::to_string(lineno));
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config: expected 'key = value' at line " + std::to_string(lineno));
        }
        const std::string key = section + "." + trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) {
            throw ConfigError("config: unknown key '" + key + "' at line " +
                              std::to_string(lineno));
        }
        it->second(key, value);
    }
    validate(cfg);
    return cfg;
}

void validate(const ScenarioConfig& cfg) {
    const auto fail = [](const std::string& msg) { throw ConfigError("config: " + msg); };
    if (cfg.v_g_ghz_per_k == 0.0) fail("group velocity must be nonzero");
    if (cfg.phonon_omega_ghz <= 0.0) fail("phonon frequency must be positive");
    if (cfg.u_mhz <= 0.0) fail("multiplexer coupling must be positive");
    if (cfg.n_p_in_per_s < 0.0) fail("pump flux must be non-negative");
    if (cfg.sweep.min >= cfg.sweep.max) fail("sweep range must satisfy min < max");
    if (cfg.sweep.points < 2) fail("sweep needs at least 2 points");
    if (cfg.thermal.min >= cfg.thermal.max) fail("thermal range must satisfy min < max");
    if (cfg.thermal.min <= 0.0) fail("thermal range must be positive");
    if (cfg.thermal.points < 2) fail("thermal sweep needs at least 2 points");
    if (cfg.n_max < 1 || cfg.n_max > 60) fail("truncation n_max must lie in [1, 60]");
    if (cfg.temperature_k <= 0.0) fail("temperature must be positive");
    if (cfg.gamma_phonon_mhz < 0.0 || cfg.gamma_photon_mhz < 0.0) {
        fail("damping rates must be non-negative");
    }
    if (cfg.strong_coupling_ratio <= 0.0) fail("strong-coupling ratio must be positive");
    if (cfg.format != "csv" && cfg.format != "json") fail("format must be csv or json");
}

}  // namespace brillouin
