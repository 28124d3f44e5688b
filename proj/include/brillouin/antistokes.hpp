#pragma once

#include "brillouin/types.hpp"

namespace brillouin {

/// Inputs of the beam-splitter (anti-Stokes) Hamiltonian in the pump rotating
/// frame: dw a'a + W b'b + conj(f) b'a + f b a', all in GHz. The coupling may
/// be complex; its phase enters only the photon amplitudes Y.
struct AntiStokesParams {
    Real delta_omega_as = 0.0;  // dw = omega_antistokes - omega_pump
    Real Omega_as = 0.0;        // phonon frequency
    Complex f_as = 0.0;         // effective coupling

    Real detuning() const { return 0.5 * (delta_omega_as - Omega_as); }  // delta_as
    Real splitting() const;  // Delta_as = sqrt(delta^2 + |f|^2)
};

enum class PolaritonMode { Plus, Minus };

/// Polariton diagonalization. X is the phonon amplitude (real by convention),
/// Y the photon amplitude (carries the coupling phase). The *_sq fields hold
/// the mode fractions |X|^2, |Y|^2 evaluated from the cancellation-free ratio
/// (Delta -+ delta) / (2 Delta).
struct PolaritonDiagonalization {
    Real Omega_plus = 0.0;
    Real Omega_minus = 0.0;
    Complex X_plus = 0.0;
    Complex X_minus = 0.0;
    Complex Y_plus = 0.0;
    Complex Y_minus = 0.0;
    Real Delta_as = 0.0;
    Real delta_as = 0.0;
    Real x_plus_sq = 0.0;
    Real x_minus_sq = 0.0;
    Real y_plus_sq = 0.0;
    Real y_minus_sq = 0.0;

    Complex X(PolaritonMode m) const { return m == PolaritonMode::Plus ? X_plus : X_minus; }
    Complex Y(PolaritonMode m) const { return m == PolaritonMode::Plus ? Y_plus : Y_minus; }
};

/// One excitation shared between photon and phonon.
struct SingleExcitationState {
    Complex amp_photon = 0.0;  // coefficient of |1_phot, 0_phon>
    Complex amp_phonon = 0.0;  // coefficient of |0_phot, 1_phon>
};

/// Result of applying a polariton creation operator to |n, m>: a two-term
/// superposition conj(Y) sqrt(n+1) |n+1, m> + conj(X) sqrt(m+1) |n, m+1>,
/// kept unnormalized as produced.
struct CollectiveExcitation {
    int n = 0;  // source photon number
    int m = 0;  // source phonon number
    Complex photon_raised = 0.0;  // coefficient of |n+1, m>
    Complex phonon_raised = 0.0;  // coefficient of |n, m+1>

    Real norm() const;
    CollectiveExcitation normalized() const;
};

/// Throws DegenerateCoupling when Delta_as = 0 (zero detuning and zero
/// coupling), where the transformation is undefined.
PolaritonDiagonalization diagonalize_antistokes(const AntiStokesParams& p);

CollectiveExcitation apply_collective_creation(PolaritonMode mode, int n, int m,
                                               const PolaritonDiagonalization& diag);

/// Normalized state created out of the vacuum; Bell-type at resonance.
SingleExcitationState single_excitation_state(PolaritonMode mode,
                                              const PolaritonDiagonalization& diag);

/// Photon survival probability of the initial state |1_phot, 0_phon>:
/// P(t) = 1 - (|f|^2 / Delta^2) sin^2(Delta t), t in ns for GHz inputs.
Real photon_population(const AntiStokesParams& p, Real t);

}  // namespace brillouin
