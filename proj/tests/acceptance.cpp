// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run all criteria with no arguments, a single one with
// --criterion N; --cli PATH points at the command-line binary for the
// exit-code criterion.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "brillouin/antistokes.hpp"
#include "brillouin/config.hpp"
#include "brillouin/environment.hpp"
#include "brillouin/errors.hpp"
#include "brillouin/fock.hpp"
#include "brillouin/model.hpp"
#include "brillouin/stokes.hpp"

namespace {

using namespace brillouin;

struct CriterionResult {
    bool passed = true;
    std::string detail;
};

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            if (!detail.str().empty()) detail << "; ";
            detail << what;
        }
    }
    CriterionResult result(const std::string& pass_note) const {
        const std::string text = detail.str();
        return {ok, ok && text.empty() ? pass_note : text};
    }
};

std::string num(Real v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.8g", v);
    return buf;
}

Real rel_err(Real value, Real reference) {
    return std::abs(value - reference) / std::abs(reference);
}

// 1. Reference drive (g = 1 MHz, u = 1 MHz, n_p_in = 1e12 /s) gives f = 1 GHz exactly.
CriterionResult criterion1() {
    Checker check;
    const PumpField field = pump_steady_state({1e12, 1e6, 1e15, 900.0, 2});
    check.require(field.n_p == 1e6, "intracavity photon number is not exactly 1e6");
    check.require(field.amplitude == 1e3, "pump amplitude is not exactly 1e3");
    const Complex f = effective_coupling(Complex(1e-3, 0.0), field);
    check.require(f == Complex(1.0, 0.0), "effective coupling is not exactly 1 GHz");
    return check.result("f = 1 GHz exactly from g sqrt(n_p_in/u)");
}

// 2. Stokes closed forms at delta_s = 0 to 1e-8 relative; hyperbolic identity
//    across 201 sweep points to 1e-12.
CriterionResult criterion2() {
    Checker check;
    const StokesDiagonalization d = diagonalize_stokes({10.0, 10.0, 1.0});
    const Real sqrt99 = 9.9498743710661995;
    check.require(rel_err(d.Delta_s, sqrt99) < 1e-8,
                  "Delta_s = " + num(d.Delta_s) + " vs sqrt(99)");
    check.require(rel_err(d.omega_0, -0.050125628933800453) < 1e-8,
                  "omega_0 = " + num(d.omega_0));
    check.require(rel_err(d.cosh2, 1.0025189076296060) < 1e-8, "cosh2 = " + num(d.cosh2));
    check.require(rel_err(d.sinh2, 0.0025189076296060377) < 1e-8, "sinh2 = " + num(d.sinh2));

    Real identity_defect = 0.0;
    for (int i = 0; i < 201; ++i) {
        const Real delta = -5.0 + 10.0 * i / 200.0;
        const StokesDiagonalization point =
            diagonalize_stokes({10.0 + 2.0 * delta, 10.0, 1.0});
        identity_defect = std::max(identity_defect,
                                   std::abs(point.cosh2 - point.sinh2 - 1.0));
    }
    check.require(identity_defect < 1e-12,
                  "cosh2 - sinh2 - 1 reaches " + num(identity_defect));
    return check.result("closed forms match sqrt(99) values to 1e-8, identity to 1e-12");
}

// 3. Fock oracle at n_max = 30: ground energy to 1e-6 relative, ground-state
//    fidelity >= 1 - 1e-6, off-pair amplitudes < 1e-10.
CriterionResult criterion3() {
    Checker check;
    const StokesParams params{10.0, 10.0, 1.0};
    const StokesDiagonalization d = diagonalize_stokes(params);
    const fock::FockOperator h = fock::build_stokes_hamiltonian(params, 30);
    const fock::EigenSystem sys = fock::eigensystem(h);

    const Real energy_residual = rel_err(sys.values(0), d.omega_0);
    check.require(energy_residual < 1e-6,
                  "ground energy residual " + num(energy_residual));

    const SqueezedStateExpansion expansion = squeezed_amplitudes(d.r, 30);
    Vector closed = Vector::Zero(h.basis.dim());
    for (int n = 0; n <= 30; ++n) closed(h.basis.index(n, n)) = expansion.amplitudes[n];
    const Real fidelity = std::norm(sys.vectors.col(0).dot(closed));
    check.require(fidelity >= 1.0 - 1e-6, "ground fidelity " + num(fidelity));

    Real off_pair = 0.0;
    for (int i = 0; i < h.basis.dim(); ++i) {
        const auto [n, m] = h.basis.occupation(i);
        if (n != m) off_pair = std::max(off_pair, std::abs(sys.vectors.col(0)(i)));
    }
    check.require(off_pair < 1e-10, "off-pair amplitude " + num(off_pair));
    return check.result("ground energy, fidelity and pair structure all within tolerance");
}

// 4. Squeeze-operator factorization: exponential vs factored constructions
//    agree to 1e-8 on the interior subspace at r = 0.05, n_max = 12.
CriterionResult criterion4() {
    Checker check;
    const fock::FockOperator s_exp =
        fock::build_squeeze_operator(0.05, 12, fock::SqueezeMethod::Exponential);
    const fock::FockOperator s_fact =
        fock::build_squeeze_operator(0.05, 12, fock::SqueezeMethod::Factored);
    Real defect2 = 0.0;
    for (int n = 0; n <= 6; ++n) {
        for (int m = 0; m <= 6; ++m) {
            for (int np = 0; np <= 6; ++np) {
                for (int mp = 0; mp <= 6; ++mp) {
                    const int i = s_exp.basis.index(n, m);
                    const int j = s_exp.basis.index(np, mp);
                    defect2 += std::norm(s_exp.entries(i, j) - s_fact.entries(i, j));
                }
            }
        }
    }
    const Real defect = std::sqrt(defect2);
    check.require(defect < 1e-8, "interior norm difference " + num(defect));
    return check.result("constructions agree on n,m <= 6 (difference " + num(defect) + ")");
}

// 5. Anti-Stokes resonance: splitting exactly 2 GHz, fractions exactly 1/2,
//    single-excitation eigenvalues {9, 11} to machine precision.
CriterionResult criterion5() {
    Checker check;
    const AntiStokesParams params{10.0, 10.0, Complex(1.0, 0.0)};
    const PolaritonDiagonalization d = diagonalize_antistokes(params);
    check.require(d.Omega_plus - d.Omega_minus == 2.0, "splitting is not exactly 2 GHz");
    check.require(d.x_plus_sq == 0.5 && d.y_plus_sq == 0.5 && d.x_minus_sq == 0.5 &&
                      d.y_minus_sq == 0.5,
                  "fractions are not exactly 1/2");

    const RealVector spectrum =
        fock::eigenvalues(fock::build_antistokes_hamiltonian(params, 1));
    check.require(std::abs(spectrum(1) - 9.0) < 1e-12,
                  "lower polariton " + num(spectrum(1)));
    check.require(std::abs(spectrum(2) - 11.0) < 1e-12,
                  "upper polariton " + num(spectrum(2)));
    return check.result("splitting 2 GHz, half-half fractions, eigenvalues {9, 11}");
}

// 6. Oracle evolution of |1,0> at resonance: full transfer at t = pi/(2 f)
//    within 1e-8, closed-form Rabi expression matched at 50 times to 1e-8.
CriterionResult criterion6() {
    Checker check;
    const AntiStokesParams params{10.0, 10.0, Complex(1.0, 0.0)};
    const fock::FockOperator h = fock::build_antistokes_hamiltonian(params, 4);
    const fock::FockState photon = fock::basis_state(h.basis, 1, 0);

    const Real t_transfer = std::numbers::pi / 2.0;
    const fock::FockState transferred = fock::evolve_state(h, photon, t_transfer);
    const Real phonon_probability =
        std::norm(transferred.amplitudes(h.basis.index(0, 1)));
    check.require(std::abs(phonon_probability - 1.0) < 1e-8,
                  "transfer probability " + num(phonon_probability));

    Real dynamics_defect = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Real t = 2.0 * std::numbers::pi * i / 49.0;
        const fock::FockState evolved = fock::evolve_state(h, photon, t);
        const Real p_oracle = std::norm(evolved.amplitudes(h.basis.index(1, 0)));
        dynamics_defect =
            std::max(dynamics_defect, std::abs(p_oracle - photon_population(params, t)));
    }
    check.require(dynamics_defect < 1e-8, "Rabi mismatch " + num(dynamics_defect));
    return check.result("complete transfer at pi/(2 f); 50-point dynamics match");
}

// 7. Figure-shape regressions over delta in [-5, 5], 201 points.
CriterionResult criterion7() {
    Checker check;
    Real max_cosh2 = 0.0;
    Real max_sinh2 = 0.0;
    Real max_beta_dev = 0.0;
    std::vector<Real> alpha;
    for (int i = 0; i < 201; ++i) {
        const Real delta = -5.0 + 10.0 * i / 200.0;
        const StokesDiagonalization d = diagonalize_stokes({10.0 + 2.0 * delta, 10.0, 1.0});
        max_cosh2 = std::max(max_cosh2, d.cosh2);
        max_sinh2 = std::max(max_sinh2, d.sinh2);
        max_beta_dev = std::max(max_beta_dev, std::abs(d.omega_beta - 10.0) / 10.0);
        alpha.push_back(d.omega_alpha);
    }
    const Real range = alpha.back() - alpha.front();
    Real max_secant_dev = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const Real fit = alpha.front() + range * static_cast<Real>(i) / 200.0;
        max_secant_dev = std::max(max_secant_dev, std::abs(alpha[i] - fit));
    }
    check.require(max_secant_dev / range < 0.01,
                  "omega_alpha secant deviation " + num(max_secant_dev / range) +
                      " of range (bound 0.01)");
    check.require(max_beta_dev < 0.01,
                  "max |omega_beta - Omega|/Omega = " + num(max_beta_dev) + " (bound 0.01)");
    check.require(max_cosh2 <= 1.01, "max cosh2 = " + num(max_cosh2) + " (bound 1.01)");
    check.require(max_sinh2 <= 0.01, "max sinh2 = " + num(max_sinh2) + " (bound 0.01)");

    bool monotone = true;
    bool crossing = false;
    Real previous = -1.0;
    for (int i = 0; i < 201; ++i) {
        const Real delta = -5.0 + 10.0 * i / 200.0;
        const PolaritonDiagonalization d =
            diagonalize_antistokes({10.0 + 2.0 * delta, 10.0, Complex(1.0, 0.0)});
        if (i > 0 && d.y_plus_sq <= previous) monotone = false;
        previous = d.y_plus_sq;
        if (delta == 0.0 && d.x_plus_sq == 0.5 && d.y_plus_sq == 0.5) crossing = true;
    }
    check.require(monotone, "anti-Stokes fraction curves are not monotone");
    check.require(crossing, "half-half crossing missing at delta = 0");
    return check.result("all figure-shape bounds hold");
}

// 8. Thermal claims with CODATA constants.
CriterionResult criterion8() {
    Checker check;
    const Real hot = thermal_occupation(1e10, 300.0);
    check.require(hot > 100.0, "n(300 K) = " + num(hot) + " not > 100");
    check.require(rel_err(hot, 624.59870701212910) < 0.01,
                  "n(300 K) = " + num(hot) + " off the reference by > 1%");
    const Real cold = thermal_occupation(1e10, 0.01);
    check.require(cold < 1e-15, "n(10 mK) = " + num(cold) + " not < 1e-15");
    return check.result("n(300 K) = " + num(hot) + ", n(10 mK) = " + num(cold));
}

// 9. Bell-limit fidelity: >= 0.99 at r = 0.05 and monotone toward 1 as r -> 0.
CriterionResult criterion9() {
    Checker check;
    check.require(bell_approximation(0.05).fidelity >= 0.99,
                  "fidelity at r = 0.05 below 0.99");
    Real previous = 0.0;
    for (const Real r : {0.2, 0.1, 0.05, 0.01}) {
        const Real fidelity = bell_approximation(r).fidelity;
        check.require(fidelity > previous,
                      "fidelity not increasing as r decreases at r = " + num(r));
        check.require(fidelity <= 1.0 + 1e-15, "fidelity above 1 at r = " + num(r));
        previous = fidelity;
    }
    check.require(std::abs(bell_approximation(0.0).fidelity - 1.0) == 0.0,
                  "fidelity at r = 0 is not 1");
    return check.result("fidelity 0.9984 -> 0.9999 -> ~1 as r -> 0");
}

// 10. Stability gate: unstable parameters raise, and the verify command exits
//     nonzero on them.
CriterionResult criterion10(const std::string& cli) {
    Checker check;
    bool raised = false;
    try {
        diagonalize_stokes({0.0, 2.0, 5.0});  // bar_omega = 1 < f = 5
    } catch (const StabilityViolation&) {
        raised = true;
    }
    check.require(raised, "StabilityViolation was not raised for bar_omega < f");

    try {
        diagonalize_stokes({10.0, 10.0, 10.0});  // bar_omega == f
        check.require(false, "StabilityViolation was not raised for bar_omega == f");
    } catch (const StabilityViolation&) {
    }

    if (cli.empty()) {
        check.require(false, "no --cli path given; cannot exercise the verify exit code");
        return check.result("");
    }
    const std::string config_path = "acceptance_unstable.ini";
    std::ofstream(config_path) << "[coupling]\ng_s_mhz = 30000\n";
    const std::string command =
        cli + " verify --config " + config_path + " > acceptance_verify.log 2>&1";
    const int status = std::system(command.c_str());
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::remove(config_path.c_str());
    std::remove("acceptance_verify.log");
    check.require(exit_code != 0, "verify exited 0 on unstable parameters");
    check.require(exit_code == 2, "verify exit code was " + std::to_string(exit_code) +
                                      ", expected 2");
    return check.result("StabilityViolation raised; verify exited 2");
}

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;  // 0 = all
    std::string cli;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            selected = std::atoi(argv[++i]);
        } else if (arg == "--cli" && i + 1 < argc) {
            cli = argv[++i];
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N] [--cli PATH]\n");
            return 1;
        }
    }

    const std::vector<std::pair<std::string, std::function<CriterionResult()>>> criteria{
        {"effective coupling at the reference drive", criterion1},
        {"Stokes diagonalization closed forms", criterion2},
        {"Stokes oracle equivalence (n_max = 30)", criterion3},
        {"squeeze-operator factorization", criterion4},
        {"anti-Stokes resonance splitting and fractions", criterion5},
        {"anti-Stokes dynamics vs oracle evolution", criterion6},
        {"figure-shape regressions", criterion7},
        {"thermal occupation claims", criterion8},
        {"Bell-limit fidelity", criterion9},
        {"stability gate and verify exit code", [&cli] { return criterion10(cli); }},
    };

    bool all_passed = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i) + 1;
        if (selected != 0 && selected != number) continue;
        const CriterionResult result = criteria[i].second();
        std::printf("[%2d] %s  %s: %s\n", number, result.passed ? "PASS" : "FAIL",
                    criteria[i].first.c_str(), result.detail.c_str());
        all_passed = all_passed && result.passed;
    }
    return all_passed ? 0 : 1;
}
