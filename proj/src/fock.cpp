#include "brillouin/fock.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace brillouin::fock {

namespace {

constexpr Real kHermiticityTolerance = 1e-9;

Matrix zero_matrix(const FockBasis& basis) { return Matrix::Zero(basis.dim(), basis.dim()); }

void require_same_basis(const FockBasis& a, const FockBasis& b) {
    if (a.n_max != b.n_max) {
        throw std::invalid_argument("fock: operands live on different truncations");
    }
}

/// exp(-i H t) for Hermitian H, via spectral decomposition.
Matrix unitary_exponential(const Matrix& hermitian, Real t) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("fock: eigensolver failed to converge");
    }
    const RealVector& lambda = solver.eigenvalues();
    Vector phases(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        phases(i) = std::exp(Complex(0.0, -lambda(i) * t));
    }
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

/// exp(N) for a nilpotent matrix: the series terminates once a power vanishes.
Matrix nilpotent_exponential(const Matrix& n) {
    Matrix result = Matrix::Identity(n.rows(), n.cols());
    Matrix term = result;
    for (int k = 1; k <= n.rows(); ++k) {
        term = (term * n / static_cast<Real>(k)).eval();
        if (term.cwiseAbs().maxCoeff() == 0.0) break;
        result += term;
    }
    return result;
}

}  // namespace

FockState FockState::normalized() const {
    FockState out = *this;
    const Real n = norm();
    if (n > 0.0) out.amplitudes /= n;
    return out;
}

FockState vacuum_state(const FockBasis& basis) { return basis_state(basis, 0, 0); }

FockState basis_state(const FockBasis& basis, int n_phot, int m_phon) {
    if (n_phot < 0 || m_phon < 0 || n_phot > basis.n_max || m_phon > basis.n_max) {
        throw std::invalid_argument("fock: occupation outside truncation");
    }
    FockState psi{basis, Vector::Zero(basis.dim())};
    psi.amplitudes(basis.index(n_phot, m_phon)) = 1.0;
    return psi;
}

FockOperator photon_annihilation(const FockBasis& basis) {
    Matrix a = zero_matrix(basis);
    for (int n = 1; n <= basis.n_max; ++n) {
        for (int m = 0; m <= basis.n_max; ++m) {
            a(basis.index(n - 1, m), basis.index(n, m)) = std::sqrt(static_cast<Real>(n));
        }
    }
    return {basis, std::move(a)};
}

FockOperator phonon_annihilation(const FockBasis& basis) {
    Matrix b = zero_matrix(basis);
    for (int n = 0; n <= basis.n_max; ++n) {
        for (int m = 1; m <= basis.n_max; ++m) {
            b(basis.index(n, m - 1), basis.index(n, m)) = std::sqrt(static_cast<Real>(m));
        }
    }
    return {basis, std::move(b)};
}

FockOperator photon_number(const FockBasis& basis) {
    Matrix na = zero_matrix(basis);
    for (int i = 0; i < basis.dim(); ++i) na(i, i) = basis.occupation(i).first;
    return {basis, std::move(na)};
}

FockOperator phonon_number(const FockBasis& basis) {
    Matrix nb = zero_matrix(basis);
    for (int i = 0; i < basis.dim(); ++i) nb(i, i) = basis.occupation(i).second;
    return {basis, std::move(nb)};
}

FockOperator build_stokes_hamiltonian(const StokesParams& p, int n_max) {
    if (n_max < 1) throw std::invalid_argument("fock: n_max must be at least 1");
    const FockBasis basis{n_max};
    Matrix h = zero_matrix(basis);
    // The phonon phase gauge is fixed so that the squeezed vacuum with
    // positive pair amplitudes is the exact ground state; the pair term
    // therefore enters with a minus sign. Spectra and occupations are
    // gauge-independent.
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= n_max; ++m) {
            const int i = basis.index(n, m);
            h(i, i) = p.delta_omega_s * n + p.Omega_s * m;
            if (n < n_max && m < n_max) {
                const Real amp = -p.f_s * std::sqrt(static_cast<Real>((n + 1) * (m + 1)));
                h(basis.index(n + 1, m + 1), i) += amp;  // pair creation
                h(i, basis.index(n + 1, m + 1)) += amp;  // pair annihilation
            }
        }
    }
    return {basis, std::move(h)};
}

FockOperator build_antistokes_hamiltonian(const AntiStokesParams& p, int n_max) {
    if (n_max < 1) throw std::invalid_argument("fock: n_max must be at least 1");
    const FockBasis basis{n_max};
    Matrix h = zero_matrix(basis);
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= n_max; ++m) {
            const int i = basis.index(n, m);
            h(i, i) = p.delta_omega_as * n + p.Omega_as * m;
            // conj(f) b'a: photon -> phonon conversion
            if (n > 0 && m < n_max) {
                const Real amp = std::sqrt(static_cast<Real>(n * (m + 1)));
                h(basis.index(n - 1, m + 1), i) += std::conj(p.f_as) * amp;
            }
            // f b a': phonon -> photon conversion
            if (n < n_max && m > 0) {
                const Real amp = std::sqrt(static_cast<Real>((n + 1) * m));
                h(basis.index(n + 1, m - 1), i) += p.f_as * amp;
            }
        }
    }
    return {basis, std::move(h)};
}

FockOperator build_squeeze_operator(Real r, int n_max, SqueezeMethod method) {
    if (n_max < 1) throw std::invalid_argument("fock: n_max must be at least 1");
    const FockBasis basis{n_max};
    const Matrix a = photon_annihilation(basis).entries;
    const Matrix b = phonon_annihilation(basis).entries;
    const Matrix pair_creation = a.adjoint() * b.adjoint();

    if (method == SqueezeMethod::Exponential) {
        // S = exp(G) with G = r (a'b' - ab); i G is Hermitian, so the
        // spectral route gives exp(-i (iG)).
        const Matrix generator = r * (pair_creation - (pair_creation.adjoint()).eval());
        return {basis, unitary_exponential(Complex(0.0, 1.0) * generator, 1.0)};
    }

    const Real th = std::tanh(r);
    const Matrix raise = nilpotent_exponential(th * pair_creation);
    const Matrix lower = nilpotent_exponential(-th * pair_creation.adjoint());
    Vector middle(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) {
        const auto [n, m] = basis.occupation(i);
        middle(i) = std::pow(std::cosh(r), -static_cast<Real>(n + m + 1));
    }
    return {basis, raise * middle.asDiagonal() * lower};
}

FockOperator collective_creation(const PolaritonDiagonalization& diag, PolaritonMode mode,
                                 const FockBasis& basis) {
    const Matrix a = photon_annihilation(basis).entries;
    const Matrix b = phonon_annihilation(basis).entries;
    return {basis, std::conj(diag.Y(mode)) * a.adjoint() + std::conj(diag.X(mode)) * b.adjoint()};
}

Real hermiticity_defect(const FockOperator& op) {
    return (op.entries - op.entries.adjoint()).cwiseAbs().maxCoeff();
}

Real commutator_norm(const FockOperator& a, const FockOperator& b) {
    require_same_basis(a.basis, b.basis);
    return (a.entries * b.entries - b.entries * a.entries).cwiseAbs().maxCoeff();
}

RealVector eigenvalues(const FockOperator& op) {
    if (hermiticity_defect(op) > kHermiticityTolerance) {
        throw std::invalid_argument("fock: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.entries, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("fock: eigensolver failed to converge");
    }
    return solver.eigenvalues();
}

EigenSystem eigensystem(const FockOperator& op) {
    if (hermiticity_defect(op) > kHermiticityTolerance) {
        throw std::invalid_argument("fock: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.entries);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("fock: eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

FockState evolve_state(const FockOperator& hamiltonian, const FockState& psi0, Real t) {
    require_same_basis(hamiltonian.basis, psi0.basis);
    if (!std::isfinite(t)) throw std::invalid_argument("fock: evolution time must be finite");
    if (hermiticity_defect(hamiltonian) > kHermiticityTolerance) {
        throw std::invalid_argument("fock: matrix is not Hermitian");
    }
    return {psi0.basis, unitary_exponential(hamiltonian.entries, t) * psi0.amplitudes};
}

ModeOccupation number_expectations(const FockState& psi) {
    ModeOccupation occ;
    for (int i = 0; i < psi.basis.dim(); ++i) {
        const auto [n, m] = psi.basis.occupation(i);
        const Real p = std::norm(psi.amplitudes(i));
        occ.n_phot += p * n;
        occ.n_phon += p * m;
    }
    return occ;
}

void write_state(const FockState& psi, std::ostream& out) {
    out << std::setprecision(17);
    out << "# fock state, layout: index = n_phot * (n_max + 1) + m_phon\n";
    out << "# n_max " << psi.basis.n_max << " dim " << psi.basis.dim() << "\n";
    out << "# index real imag\n";
    for (int i = 0; i < psi.basis.dim(); ++i) {
        out << i << ' ' << psi.amplitudes(i).real() << ' ' << psi.amplitudes(i).imag() << '\n';
    }
}

void write_operator(const FockOperator& op, std::ostream& out) {
    const int dim = op.basis.dim();
    out << std::setprecision(17);
    out << "# fock operator, nonzero entries, layout: index = row * dim + column,\n";
    out << "# row/column = n_phot * (n_max + 1) + m_phon\n";
    out << "# n_max " << op.basis.n_max << " dim " << dim << "\n";
    out << "# index real imag\n";
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const Complex v = op.entries(i, j);
            if (v != Complex(0.0, 0.0)) {
                out << (static_cast<long long>(i) * dim + j) << ' ' << v.real() << ' '
                    << v.imag() << '\n';
            }
        }
    }
}

}  // namespace brillouin::fock
