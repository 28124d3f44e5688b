#include "brillouin/sweep.hpp"

#include <cmath>
#include <limits>

#include "brillouin/errors.hpp"

namespace brillouin {

namespace {

constexpr Real kNaN = std::numeric_limits<Real>::quiet_NaN();

Real linear_point(const SweepRange& range, int i) {
    return range.min + (range.max - range.min) * static_cast<Real>(i) /
                           static_cast<Real>(range.points - 1);
}

Real log_point(const SweepRange& range, int i) {
    const Real lmin = std::log10(range.min);
    const Real lmax = std::log10(range.max);
    return std::pow(10.0, lmin + (lmax - lmin) * static_cast<Real>(i) /
                              static_cast<Real>(range.points - 1));
}

}  // namespace

Table run_stokes_sweep(const ScenarioConfig& cfg) {
    Table table;
    table.header = {"delta_s", "omega_alpha", "omega_beta", "omega_0",
                    "cosh2",   "sinh2",       "r",          "entropy",
                    "status"};
    for (int i = 0; i < cfg.sweep.points; ++i) {
        const Real delta = linear_point(cfg.sweep, i);
        try {
            const StokesDiagonalization d = diagonalize_stokes(cfg.stokes_at(delta));
            const SqueezedStatistics stats = squeezed_statistics(d.r);
            table.rows.push_back({delta, d.omega_alpha, d.omega_beta, d.omega_0, d.cosh2,
                                  d.sinh2, d.r, stats.entanglement_entropy, std::string("ok")});
        } catch (const StabilityViolation&) {
            table.rows.push_back({delta, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN,
                                  std::string("unstable")});
        }
    }
    return table;
}

Table run_antistokes_sweep(const ScenarioConfig& cfg) {
    Table table;
    table.header = {"delta_as",   "omega_plus", "omega_minus", "x_plus_sq",
                    "y_plus_sq",  "x_minus_sq", "y_minus_sq",  "status"};
    for (int i = 0; i < cfg.sweep.points; ++i) {
        const Real delta = linear_point(cfg.sweep, i);
        try {
            const PolaritonDiagonalization d = diagonalize_antistokes(cfg.antistokes_at(delta));
            table.rows.push_back({delta, d.Omega_plus, d.Omega_minus, d.x_plus_sq, d.y_plus_sq,
                                  d.x_minus_sq, d.y_minus_sq, std::string("ok")});
        } catch (const DegenerateCoupling&) {
            table.rows.push_back(
                {delta, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, std::string("degenerate")});
        }
    }
    return table;
}

Table run_state_dump(Real r, int n_max) {
    const SqueezedStateExpansion expansion = squeezed_amplitudes(r, n_max);
    Table table;
    table.header = {"n", "c_n", "ratio"};
    for (int n = 0; n <= n_max; ++n) {
        const Real ratio = n > 0 && expansion.amplitudes[n - 1] > 0.0
                               ? expansion.amplitudes[n] / expansion.amplitudes[n - 1]
                               : kNaN;
        table.rows.push_back({static_cast<Real>(n), expansion.amplitudes[n], ratio});
    }
    return table;
}

Table run_thermal(const ScenarioConfig& cfg) {
    const Real freq_hz = cfg.phonon_omega_ghz * 1e9;
    Table table;
    table.header = {"temperature_k", "n_thermal"};
    for (int i = 0; i < cfg.thermal.points; ++i) {
        const Real temperature = log_point(cfg.thermal, i);
        table.rows.push_back({temperature, thermal_occupation(freq_hz, temperature)});
    }
    return table;
}

}  // namespace brillouin
