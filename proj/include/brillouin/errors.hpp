#pragma once

#include <stdexcept>
#include <string>

namespace brillouin {

/// Thrown when a pair-creation Hamiltonian has no real Bogoliubov form,
/// i.e. the mean frequency does not exceed the effective coupling.
class StabilityViolation : public std::domain_error {
public:
    explicit StabilityViolation(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when the polariton transformation is undefined (zero detuning
/// and zero coupling); the caller should fall back to the identity.
class DegenerateCoupling : public std::domain_error {
public:
    explicit DegenerateCoupling(const std::string& what) : std::domain_error(what) {}
};

/// Malformed or inconsistent scenario configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace brillouin
