#pragma once

#include <string>

#include "brillouin/antistokes.hpp"
#include "brillouin/environment.hpp"
#include "brillouin/model.hpp"
#include "brillouin/stokes.hpp"

namespace brillouin {

struct SweepRange {
    Real min = 0.0;
    Real max = 0.0;
    int points = 2;
};

/// Scenario description parsed from a sectioned key-value file. Every key
/// carries an explicit unit suffix; defaults reproduce the silicon-nanowire
/// operating point (g = 1 MHz, u = 1 MHz, n_p_in = 1e12 /s, Omega = 10 GHz).
struct ScenarioConfig {
    // [branches]
    Real omega1_ghz = 200.0;    // scattered photon branch offset
    Real omega2_ghz = 100.0;    // pump branch offset
    Real v_g_ghz_per_k = 1.0;   // shared group velocity

    // [phonon]
    Real phonon_omega_ghz = 10.0;

    // [coupling]
    Real g_s_mhz = 1.0;
    Real g_as_mhz = 1.0;

    // [pump]
    Real n_p_in_per_s = 1e12;
    Real u_mhz = 1.0;
    Real pump_omega_hz = 1e15;
    Real pump_k = 900.0;

    // [sweep] detuning sweep, GHz
    SweepRange sweep{-5.0, 5.0, 201};

    // [thermal] temperature sweep, K, log-spaced
    SweepRange thermal{1e-3, 300.0, 61};

    // [fock]
    int n_max = 30;

    // [environment]
    Real temperature_k = 0.01;
    Real gamma_phonon_mhz = 1.0;
    Real gamma_photon_mhz = 0.01;
    Real strong_coupling_ratio = 10.0;

    // [output]
    std::string format = "csv";  // csv | json
    std::string out_path;        // empty writes to stdout

    ModelParams model() const;
    PumpField pump_field() const;
    Real f_s_ghz() const;        // real effective Stokes coupling, |g_s| sqrt(n_p)
    Complex f_as_ghz() const;
    EnvironmentParams environment() const;

    /// Stokes parameters at detuning delta_s, holding the phonon frequency
    /// fixed: delta_omega_s = Omega + 2 delta_s.
    StokesParams stokes_at(Real delta_s_ghz) const;
    AntiStokesParams antistokes_at(Real delta_as_ghz) const;
};

/// Parses the sectioned key-value format ('#'/';' comments, 'key = value').
/// Unknown sections or keys and malformed values raise ConfigError.
ScenarioConfig load_config(const std::string& path);

/// Cross-field checks (ranges ordered, points >= 2, truncation in [1, 60],
/// positive rates). Throws ConfigError.
void validate(const ScenarioConfig& cfg);

}  // namespace brillouin
