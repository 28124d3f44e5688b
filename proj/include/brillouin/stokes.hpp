#pragma once

#include <vector>

#include "brillouin/types.hpp"

namespace brillouin {

/// Inputs of the pair-creation (Stokes) Hamiltonian in the pump rotating
/// frame: dw a'a + W b'b + f (a'b' + ab), all in GHz. The coupling is real
/// and non-negative; any phase of the underlying photon-phonon coupling is
/// absorbed before this point.
struct StokesParams {
    Real delta_omega_s = 0.0;  // dw = omega_pump - omega_stokes
    Real Omega_s = 0.0;        // phonon frequency
    Real f_s = 0.0;            // effective coupling

    Real mean_frequency() const { return 0.5 * (delta_omega_s + Omega_s); }  // bar_omega
    Real detuning() const { return 0.5 * (delta_omega_s - Omega_s); }        // delta_s
};

/// Bogoliubov diagonalization result. The squeeze parameter fixes the mode
/// mixing; omega_alpha/omega_beta are the collective mode frequencies and
/// omega_0 the vacuum shift (<= 0, zero only at f_s = 0).
struct StokesDiagonalization {
    Real r = 0.0;
    Real cosh2 = 1.0;  // cosh^2 r
    Real sinh2 = 0.0;  // sinh^2 r
    Real Delta_s = 0.0;
    Real omega_alpha = 0.0;
    Real omega_beta = 0.0;
    Real omega_0 = 0.0;
};

/// Pair-number expansion of the squeezed vacuum: amplitude of |n,n> is
/// tanh(r)^n / cosh(r).
struct SqueezedStateExpansion {
    Real r = 0.0;
    int n_max = 0;
    std::vector<Real> amplitudes;  // size n_max + 1
};

struct SqueezedStatistics {
    Real mean_pairs = 0.0;
    Real entanglement_entropy = 0.0;  // nats
};

/// Normalized two-term truncation |0,0> + r |1,1> and its overlap with the
/// full squeezed vacuum.
struct BellApproximation {
    Real amp_00 = 1.0;
    Real amp_11 = 0.0;
    Real fidelity = 1.0;
};

/// Throws StabilityViolation unless bar_omega > f_s; throws
/// std::invalid_argument for f_s < 0.
StokesDiagonalization diagonalize_stokes(const StokesParams& p);

SqueezedStateExpansion squeezed_amplitudes(Real r, int n_max);

SqueezedStatistics squeezed_statistics(Real r);

BellApproximation bell_approximation(Real r);

/// Residual of the off-diagonal elimination condition
/// |2 bar_omega cosh r sinh r - f_s (cosh^2 r + sinh^2 r)|; vanishes
/// analytically for every stable parameter set.
Real bogoliubov_coefficients_check(const StokesParams& p);

}  // namespace brillouin
