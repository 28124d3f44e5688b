#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "brillouin/config.hpp"
#include "brillouin/environment.hpp"

namespace brillouin {

struct CheckResult {
    std::string name;
    bool passed = false;
    Real measured = 0.0;
    Real tolerance = 0.0;
    std::string note;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    RegimeReport regime;

    bool all_passed() const;
};

/// Cross-checks every closed form against the truncated-Fock oracle at the
/// configured operating point: ground energy and state of the pair-creation
/// Hamiltonian, squeeze-operator factorization, polariton spectrum,
/// single-excitation dynamics, and the algebraic identities. A stability or
/// degeneracy violation in the parameters surfaces as a failed check.
/// Requires cfg.n_max >= 20 (throws ConfigError otherwise).
VerifyReport run_verify(const ScenarioConfig& cfg);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace brillouin
