#pragma once

#include <iosfwd>
#include <utility>

#include "brillouin/antistokes.hpp"
#include "brillouin/stokes.hpp"
#include "brillouin/types.hpp"

namespace brillouin::fock {

/// Two-mode number basis with per-mode occupations 0..n_max.
/// Flat index is row-major: index = n_phot * (n_max + 1) + m_phon.
struct FockBasis {
    int n_max = 0;

    int dim() const { return (n_max + 1) * (n_max + 1); }
    int index(int n_phot, int m_phon) const { return n_phot * (n_max + 1) + m_phon; }
    std::pair<int, int> occupation(int index) const {
        return {index / (n_max + 1), index % (n_max + 1)};
    }
};

/// Dense operator on a truncated two-mode Fock space.
struct FockOperator {
    FockBasis basis;
    Matrix entries;
};

/// State vector over the same basis.
struct FockState {
    FockBasis basis;
    Vector amplitudes;

    Real norm() const { return amplitudes.norm(); }
    FockState normalized() const;
};

FockState vacuum_state(const FockBasis& basis);
FockState basis_state(const FockBasis& basis, int n_phot, int m_phon);

// Elementary mode operators (annihilation; adjoint gives creation).
FockOperator photon_annihilation(const FockBasis& basis);
FockOperator phonon_annihilation(const FockBasis& basis);
FockOperator photon_number(const FockBasis& basis);
FockOperator phonon_number(const FockBasis& basis);

/// Pair-creation Hamiltonian: dw a'a + W b'b + f (a'b' + ab).
FockOperator build_stokes_hamiltonian(const StokesParams& p, int n_max);

/// Beam-splitter Hamiltonian: dw a'a + W b'b + conj(f) b'a + f b a'.
FockOperator build_antistokes_hamiltonian(const AntiStokesParams& p, int n_max);

enum class SqueezeMethod { Exponential, Factored };

/// Two-mode squeeze operator S(r) = exp(r (a'b' - ab)).
/// Exponential builds it spectrally from the generator; Factored multiplies the
/// normal-ordered product exp(tanh r a'b') exp(-ln cosh r (Na+Nb+1)) exp(-tanh r ab).
/// Reliable only where tanh(r)^n_max is negligible; unitarity holds on the
/// interior subspace n, m <= n_max / 2.
FockOperator build_squeeze_operator(Real r, int n_max, SqueezeMethod method);

/// Matrix form of the polariton creation operator conj(Y) a' + conj(X) b'.
FockOperator collective_creation(const PolaritonDiagonalization& diag, PolaritonMode mode,
                                 const FockBasis& basis);

/// Ascending real spectrum. Throws std::invalid_argument when the symmetry
/// check max|H - H'| exceeds 1e-9.
RealVector eigenvalues(const FockOperator& op);

struct EigenSystem {
    RealVector values;   // ascending
    Matrix vectors;      // columns match values
};
EigenSystem eigensystem(const FockOperator& op);

/// psi(t) = exp(-i H t) psi0 via spectral decomposition, t in 1/frequency units.
FockState evolve_state(const FockOperator& hamiltonian, const FockState& psi0, Real t);

struct ModeOccupation {
    Real n_phot = 0.0;
    Real n_phon = 0.0;
};
ModeOccupation number_expectations(const FockState& psi);

Real hermiticity_defect(const FockOperator& op);
Real commutator_norm(const FockOperator& a, const FockOperator& b);

// Plain-text dumps for external inspection. Data lines are "index real imag";
// lines starting with '#' are comments describing n_max, dim and the row-major
// layout. States list every entry; operators list nonzero entries with flat
// index row * dim + column.
void write_state(const FockState& psi, std::ostream& out);
void write_operator(const FockOperator& op, std::ostream& out);

}  // namespace brillouin::fock
