#pragma once

#include "brillouin/config.hpp"
#include "brillouin/table.hpp"

namespace brillouin {

/// Bogoliubov quantities per detuning point. Columns:
/// delta_s, omega_alpha, omega_beta, omega_0, cosh2, sinh2, r, entropy, status.
/// Unstable points are flagged in the status column with NaN data cells
/// rather than dropped.
Table run_stokes_sweep(const ScenarioConfig& cfg);

/// Polariton quantities per detuning point. Columns:
/// delta_as, omega_plus, omega_minus, x_plus_sq, y_plus_sq, x_minus_sq,
/// y_minus_sq, status. Degenerate points are flagged, not dropped.
Table run_antistokes_sweep(const ScenarioConfig& cfg);

/// Squeezed-vacuum pair amplitudes c_n = tanh(r)^n / cosh(r).
/// Columns: n, c_n, ratio (c_n / c_{n-1}, NaN on the first row).
Table run_state_dump(Real r, int n_max);

/// Thermal phonon occupation over a log-spaced temperature range at the
/// configured phonon frequency. Columns: temperature_k, n_thermal.
Table run_thermal(const ScenarioConfig& cfg);

}  // namespace brillouin
