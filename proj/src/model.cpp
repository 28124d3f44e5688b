#include "brillouin/model.hpp"

#include <cmath>
#include <stdexcept>

namespace brillouin {

namespace {

constexpr Real kGHzToHz = 1e9;

void require_dispersive(const BranchDispersion& branch) {
    if (branch.v_g == 0.0) {
        throw std::invalid_argument("model: group velocity must be nonzero");
    }
    if (!std::isfinite(branch.omega0)) {
        throw std::invalid_argument("model: branch offset must be finite");
    }
}

ProcessKinematics match(Process process, const BranchDispersion& scattered_branch,
                        const PhononBranch& phonon, Real omega_pump, Real k_pump) {
    require_dispersive(scattered_branch);
    const Real sign = process == Process::Stokes ? -1.0 : 1.0;
    ProcessKinematics kin;
    kin.process = process;
    kin.Omega_phonon = phonon.Omega;
    kin.omega_pump = omega_pump;
    kin.omega_scattered = omega_pump + sign * phonon.Omega;
    kin.k_scattered = (kin.omega_scattered - scattered_branch.omega0) / scattered_branch.v_g;
    kin.q_phonon = k_pump - kin.k_scattered;
    return kin;
}

ProcessKinematics match(Process process, const ModelParams& params) {
    require_dispersive(params.branch2);
    ProcessKinematics kin =
        match(process, params.branch1, params.phonon,
              photon_frequency(params.branch2, params.drive.k_p), params.drive.k_p);
    const Real sign = process == Process::Stokes ? -1.0 : 1.0;
    kin.omega_scattered_abs = params.drive.omega_p + sign * params.phonon.Omega * kGHzToHz;
    return kin;
}

}  // namespace

Real photon_frequency(const BranchDispersion& branch, Real k) {
    return branch.omega0 + branch.v_g * k;
}

ProcessKinematics solve_stokes_matching(const BranchDispersion& scattered_branch,
                                        const PhononBranch& phonon, Real omega_pump,
                                        Real k_pump) {
    return match(Process::Stokes, scattered_branch, phonon, omega_pump, k_pump);
}

ProcessKinematics solve_stokes_matching(const ModelParams& params) {
    return match(Process::Stokes, params);
}

ProcessKinematics solve_antistokes_matching(const BranchDispersion& scattered_branch,
                                            const PhononBranch& phonon, Real omega_pump,
                                            Real k_pump) {
    return match(Process::AntiStokes, scattered_branch, phonon, omega_pump, k_pump);
}

ProcessKinematics solve_antistokes_matching(const ModelParams& params) {
    return match(Process::AntiStokes, params);
}

PumpField pump_steady_state(const PumpDrive& drive) {
    if (drive.u <= 0.0) {
        throw std::invalid_argument("model: multiplexer coupling u must be positive");
    }
    if (drive.n_p_in < 0.0) {
        throw std::invalid_argument("model: pump flux must be non-negative");
    }
    PumpField field;
    field.n_p = drive.n_p_in / drive.u;
    field.amplitude = std::sqrt(field.n_p);
    return field;
}

Complex effective_coupling(Complex g, const PumpField& pump) { return g * pump.amplitude; }

}  // namespace brillouin
