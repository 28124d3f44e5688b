#include "brillouin/antistokes.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "brillouin/errors.hpp"

namespace brillouin {

Real AntiStokesParams::splitting() const { return std::hypot(detuning(), std::abs(f_as)); }

Real CollectiveExcitation::norm() const {
    return std::sqrt(std::norm(photon_raised) + std::norm(phonon_raised));
}

CollectiveExcitation CollectiveExcitation::normalized() const {
    CollectiveExcitation out = *this;
    const Real n = norm();
    if (n > 0.0) {
        out.photon_raised /= n;
        out.phonon_raised /= n;
    }
    return out;
}

PolaritonDiagonalization diagonalize_antistokes(const AntiStokesParams& p) {
    const Real delta = p.detuning();
    const Real Delta = p.splitting();
    if (Delta == 0.0) {
        throw DegenerateCoupling(
            "antistokes: zero detuning and zero coupling leave the transformation undefined; "
            "use the identity");
    }

    PolaritonDiagonalization d;
    d.Delta_as = Delta;
    d.delta_as = delta;
    const Real mid = 0.5 * (p.delta_omega_as + p.Omega_as);
    d.Omega_plus = mid + Delta;
    d.Omega_minus = mid - Delta;

    d.x_plus_sq = (Delta - delta) / (2.0 * Delta);
    d.x_minus_sq = (Delta + delta) / (2.0 * Delta);
    d.y_plus_sq = d.x_minus_sq;
    d.y_minus_sq = d.x_plus_sq;

    // Y carries the coupling phase; at f = 0 the magnitude limit is kept and
    // the phase convention is 1, which reproduces the uncoupled step pattern.
    const Real abs_f = std::abs(p.f_as);
    const Complex phase = abs_f > 0.0 ? std::conj(p.f_as) / abs_f : Complex(1.0, 0.0);
    d.X_plus = std::sqrt(d.x_plus_sq);
    d.X_minus = -std::sqrt(d.x_minus_sq);
    d.Y_plus = phase * std::sqrt(d.y_plus_sq);
    d.Y_minus = phase * std::sqrt(d.y_minus_sq);
    return d;
}

CollectiveExcitation apply_collective_creation(PolaritonMode mode, int n, int m,
                                               const PolaritonDiagonalization& diag) {
    if (n < 0 || m < 0) throw std::invalid_argument("antistokes: occupations must be >= 0");
    CollectiveExcitation exc;
    exc.n = n;
    exc.m = m;
    exc.photon_raised = std::conj(diag.Y(mode)) * std::sqrt(static_cast<Real>(n + 1));
    exc.phonon_raised = std::conj(diag.X(mode)) * std::sqrt(static_cast<Real>(m + 1));
    return exc;
}

SingleExcitationState single_excitation_state(PolaritonMode mode,
                                              const PolaritonDiagonalization& diag) {
    const CollectiveExcitation exc = apply_collective_creation(mode, 0, 0, diag).normalized();
    return {exc.photon_raised, exc.phonon_raised};
}

Real photon_population(const AntiStokesParams& p, Real t) {
    const Real Delta = p.splitting();
    if (Delta == 0.0) return 1.0;  // nothing couples the photon away
    const Real s = std::sin(Delta * t);
    const Real transfer = std::norm(p.f_as) / (Delta * Delta);
    return 1.0 - transfer * s * s;
}

}  // namespace brillouin
