#include "brillouin/stokes.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "brillouin/errors.hpp"

namespace brillouin {

StokesDiagonalization diagonalize_stokes(const StokesParams& p) {
    if (p.f_s < 0.0 || !std::isfinite(p.f_s)) {
        throw std::invalid_argument("stokes: effective coupling must be real and non-negative");
    }
    const Real bar = p.mean_frequency();
    const Real delta = p.detuning();

    if (p.f_s == 0.0) {
        // Uncoupled limit: the transformation is the identity.
        StokesDiagonalization d;
        d.Delta_s = bar;
        d.omega_alpha = p.delta_omega_s;
        d.omega_beta = p.Omega_s;
        return d;
    }
    if (bar <= p.f_s) {
        std::ostringstream msg;
        msg << "stokes: squeezing instability, mean frequency " << bar
            << " GHz does not exceed coupling " << p.f_s << " GHz";
        throw StabilityViolation(msg.str());
    }

    StokesDiagonalization d;
    d.Delta_s = std::sqrt((bar - p.f_s) * (bar + p.f_s));
    d.cosh2 = (bar + d.Delta_s) / (2.0 * d.Delta_s);
    // bar - Delta rewritten as f^2 / (bar + Delta) to stay non-negative.
    d.sinh2 = p.f_s * p.f_s / (2.0 * d.Delta_s * (bar + d.Delta_s));
    d.r = std::log(std::sqrt(d.cosh2) + std::sqrt(d.sinh2));
    d.omega_alpha = d.Delta_s + delta;
    d.omega_beta = d.Delta_s - delta;
    d.omega_0 = d.Delta_s - bar;
    return d;
}

SqueezedStateExpansion squeezed_amplitudes(Real r, int n_max) {
    if (r < 0.0 || n_max < 0) {
        throw std::invalid_argument("stokes: need r >= 0 and n_max >= 0");
    }
    SqueezedStateExpansion e;
    e.r = r;
    e.n_max = n_max;
    e.amplitudes.resize(n_max + 1);
    const Real th = std::tanh(r);
    Real c = 1.0 / std::cosh(r);
    for (int n = 0; n <= n_max; ++n) {
        e.amplitudes[n] = c;
        c *= th;
    }
    return e;
}

SqueezedStatistics squeezed_statistics(Real r) {
    if (r < 0.0) throw std::invalid_argument("stokes: need r >= 0");
    const Real sh = std::sinh(r);
    const Real s2 = sh * sh;
    const Real c2 = 1.0 + s2;
    SqueezedStatistics stats;
    stats.mean_pairs = s2;
    stats.entanglement_entropy = s2 > 0.0 ? c2 * std::log(c2) - s2 * std::log(s2) : 0.0;
    return stats;
}

BellApproximation bell_approximation(Real r) {
    if (r < 0.0) throw std::invalid_argument("stokes: need r >= 0");
    BellApproximation bell;
    const Real norm = std::sqrt(1.0 + r * r);
    bell.amp_00 = 1.0 / norm;
    bell.amp_11 = r / norm;
    // Only the |0,0> and |1,1> components of the full expansion overlap.
    const Real c0 = 1.0 / std::cosh(r);
    const Real c1 = std::tanh(r) * c0;
    const Real overlap = bell.amp_00 * c0 + bell.amp_11 * c1;
    bell.fidelity = overlap * overlap;
    return bell;
}

Real bogoliubov_coefficients_check(const StokesParams& p) {
    const StokesDiagonalization d = diagonalize_stokes(p);
    const Real cs = std::sqrt(d.cosh2 * d.sinh2);  // cosh r sinh r
    return std::abs(2.0 * p.mean_frequency() * cs - p.f_s * (d.cosh2 + d.sinh2));
}

}  // namespace brillouin
