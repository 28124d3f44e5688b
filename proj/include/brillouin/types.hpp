#pragma once

#include <complex>

#include <Eigen/Dense>

namespace brillouin {

/// Dense linear-algebra aliases used throughout the library.
template <typename Scalar>
struct dense_types {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
};

using Real = double;
using Complex = std::complex<Real>;

using Matrix = dense_types<Complex>::Matrix;
using Vector = dense_types<Complex>::Vector;
using RealMatrix = dense_types<Real>::Matrix;
using RealVector = dense_types<Real>::Vector;

// Unit conventions, fixed project-wide:
//   - model frequencies and couplings are angular frequencies in GHz (rad/ns),
//     so evolution times are in ns and no 2*pi factors appear in dynamics;
//   - hbar is factored out of every Hamiltonian, energies are frequencies;
//   - laboratory-scale rates (u, g, damping) convert to GHz at the config layer.
namespace constants {
inline constexpr Real planck_J_s = 6.62607015e-34;   // CODATA h
inline constexpr Real boltzmann_J_per_K = 1.380649e-23;  // CODATA k_B
}  // namespace constants

}  // namespace brillouin
