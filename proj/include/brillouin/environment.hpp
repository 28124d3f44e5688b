#pragma once

#include "brillouin/types.hpp"

namespace brillouin {

struct EnvironmentParams {
    Real temperature = 0.0;   // K
    Real phonon_freq = 0.0;   // Hz, ordinary frequency
    Real Gamma = 0.0;         // phonon damping rate, Hz
    Real gamma_photon = 0.0;  // photon damping rate, Hz
};

/// Operating-condition summary. A ratio of +inf (zero damping) counts as
/// satisfying the corresponding inequality.
struct RegimeReport {
    Real n_thermal = 0.0;
    Real coupling_to_phonon_damping = 0.0;  // f / Gamma
    Real coupling_to_photon_loss = 0.0;     // f / gamma
    bool strong_coupling = false;           // f >> Gamma
    bool photon_loss_negligible = false;    // gamma << f
    bool thermal_negligible = false;        // n_thermal < 0.01
};

/// Bose-Einstein occupation 1 / (exp(h f / kB T) - 1) with CODATA constants.
/// Deep in the quantum regime the value underflows to 0 rather than erroring.
Real thermal_occupation(Real freq_hz, Real temperature_k);

/// Threshold ratio defines ">>": default 10 means f > 10 Gamma qualifies as
/// strong coupling.
RegimeReport regime_check(Real coupling_hz, const EnvironmentParams& env,
                          Real threshold_ratio = 10.0);

}  // namespace brillouin
