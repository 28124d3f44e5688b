#include "brillouin/environment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace brillouin {

Real thermal_occupation(Real freq_hz, Real temperature_k) {
    if (freq_hz <= 0.0 || temperature_k <= 0.0) {
        throw std::invalid_argument("environment: need positive frequency and temperature");
    }
    const Real x = constants::planck_J_s * freq_hz / (constants::boltzmann_J_per_K * temperature_k);
    // expm1 overflows to +inf for large x, so the occupation underflows to 0.
    return 1.0 / std::expm1(x);
}

RegimeReport regime_check(Real coupling_hz, const EnvironmentParams& env, Real threshold_ratio) {
    if (env.Gamma < 0.0 || env.gamma_photon < 0.0) {
        throw std::invalid_argument("environment: damping rates must be non-negative");
    }
    const Real inf = std::numeric_limits<Real>::infinity();
    RegimeReport report;
    report.n_thermal = thermal_occupation(env.phonon_freq, env.temperature);
    report.coupling_to_phonon_damping = env.Gamma > 0.0 ? coupling_hz / env.Gamma : inf;
    report.coupling_to_photon_loss = env.gamma_photon > 0.0 ? coupling_hz / env.gamma_photon : inf;
    report.strong_coupling = report.coupling_to_phonon_damping > threshold_ratio;
    report.photon_loss_negligible = report.coupling_to_photon_loss > threshold_ratio;
    report.thermal_negligible = report.n_thermal < 0.01;
    return report;
}

}  // namespace brillouin
