#pragma once

#include "brillouin/types.hpp"

namespace brillouin {

/// Linear photon branch omega(k) = omega0 + v_g k. Offsets and the shared
/// group velocity are in GHz per the model unit convention.
struct BranchDispersion {
    Real omega0 = 0.0;  // branch frequency offset, GHz
    Real v_g = 0.0;     // group velocity, GHz per wavenumber unit
};

/// Dispersionless vibrational branch.
struct PhononBranch {
    Real Omega = 0.0;  // GHz
};

struct PumpDrive {
    Real n_p_in = 0.0;    // incident pump photon flux, photons/s
    Real u = 0.0;         // multiplexer internal-external coupling, Hz
    Real omega_p = 0.0;   // absolute pump frequency, Hz
    Real k_p = 0.0;       // pump wavenumber
    int branch = 2;       // pump branch index
};

struct CouplingParams {
    Complex g_s = 0.0;   // Stokes photon-phonon coupling, GHz
    Complex g_as = 0.0;  // anti-Stokes coupling, GHz
};

/// Aggregate of every physical input. Pump photons live on branch 2,
/// scattered photons on branch 1.
struct ModelParams {
    BranchDispersion branch1;  // scattered photon branch
    BranchDispersion branch2;  // pump branch
    PhononBranch phonon;
    PumpDrive drive;
    CouplingParams couplings;
};

enum class Process { Stokes, AntiStokes };

/// Phase-matched (frequency, wavenumber) triplet for one scattering process.
/// Frequencies are the GHz dispersion bookkeeping; the absolute scattered
/// frequency in Hz follows the pump drive frequency shifted by the phonon
/// (zero when the solver was given only the working point). Conservation
/// holds exactly: k_p = k_scattered + q_phonon, and
/// omega_pump = omega_scattered + Omega (Stokes) or
/// omega_scattered = omega_pump + Omega (anti-Stokes). The sign of q_phonon
/// reports the propagation direction; it is not constrained.
struct ProcessKinematics {
    Process process = Process::Stokes;
    Real omega_pump = 0.0;           // GHz
    Real omega_scattered = 0.0;      // GHz
    Real omega_scattered_abs = 0.0;  // Hz
    Real k_scattered = 0.0;
    Real q_phonon = 0.0;
    Real Omega_phonon = 0.0;         // GHz
};

/// Classical steady-state pump amplitude.
struct PumpField {
    Real n_p = 0.0;        // intracavity photon number, n_p_in / u
    Real amplitude = 0.0;  // sqrt(n_p)
};

Real photon_frequency(const BranchDispersion& branch, Real k);

/// Solves the conservation laws for the Stokes process with the pump working
/// point (omega_pump, k_pump) taken as given; only the scattered branch
/// dispersion is inverted. Throws std::invalid_argument when v_g = 0.
ProcessKinematics solve_stokes_matching(const BranchDispersion& scattered_branch,
                                        const PhononBranch& phonon, Real omega_pump,
                                        Real k_pump);

/// Convenience form: the pump frequency comes from the branch-2 dispersion at
/// the drive wavenumber, and the absolute scattered frequency from the drive.
ProcessKinematics solve_stokes_matching(const ModelParams& params);

ProcessKinematics solve_antistokes_matching(const BranchDispersion& scattered_branch,
                                            const PhononBranch& phonon, Real omega_pump,
                                            Real k_pump);

ProcessKinematics solve_antistokes_matching(const ModelParams& params);

/// Steady state of the driven pump mode. Throws std::invalid_argument for
/// u <= 0. The flux-to-rate ratio n_p_in / u is treated as a dimensionless
/// photon number, following the input-output modeling convention.
PumpField pump_steady_state(const PumpDrive& drive);

/// Pump-enhanced coupling f = g * sqrt(n_p); the phase of g is preserved.
Complex effective_coupling(Complex g, const PumpField& pump);

}  // namespace brillouin
