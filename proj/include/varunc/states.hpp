#pragma once

#include <complex>
#include <vector>

#include "varunc/gaussian.hpp"
#include "varunc/moments.hpp"
#include "varunc/operators.hpp"

namespace varunc {

/// Truncated-Fock position/momentum pair built from ladder operators.
/// [x, p] = i hbar I holds exactly on the top-left (dim-1) x (dim-1) block;
/// the last diagonal entry carries the truncation artifact.
struct FockPair {
    int dim = 0;
    Operator x;
    Operator p;
    double hbar = 1.0;
};

FockPair fock_pair(int dim, double hbar = 1.0);

/// Ground state |0> of the truncated oscillator.
QuantumState fock_vacuum(int dim, double hbar = 1.0);

/// Parameters of the correlated coherent state: position variance sigma
/// (carrying units of hbar), correlation coefficient r in (-1, 1) and a
/// complex displacement alpha.
struct CcsParams {
    double sigma = 0.5;
    double r = 0.0;
    Complex alpha = Complex(0.0, 0.0);
};

/// Analytic phase-space moments of the correlated coherent state.  The
/// covariances saturate sigma_xx sigma_pp (1 - r^2) = hbar^2 / 4 by
/// construction, the defining property of this family.
GaussianState ccs_moments(const CcsParams& params, double hbar = 1.0);

/// Truncated Fock-basis expansion of the correlated coherent state, built by
/// the ladder-operator recurrence for Gaussian wavefunctions.  The truncation
/// tail weight must stay below 1e-8 or an error reports a sufficient dim.
QuantumState ccs_state(const CcsParams& params, int dim, double hbar = 1.0);

/// Fock-basis realization of an arbitrary pure single-mode Gaussian state
/// (covariances with det cov = hbar^2/4 plus means).  Same recurrence and
/// tail check as ccs_state.
QuantumState gaussian_pure_to_fock(const GaussianState& gs, int dim);

/// Diagonal Fock-basis realization of the uncorrelated thermal state with
/// sigma_xx = sigma_pp = sigma_th and sigma_xp = 0.
QuantumState thermal_state(double sigma_th, int dim, double hbar = 1.0);

/// Standard angular momentum component matrices for spin j = two_j / 2, in
/// the basis |j, m> ordered m = j, j-1, ..., -j.
struct SpinOperators {
    Operator lx;
    Operator ly;
    Operator lz;
};

SpinOperators spin_operators(int two_j, double hbar = 1.0);

/// Normalized spin state from coefficients in the |j, m> basis ordered
/// m = j ... -j (dimension = coeffs.size()).
QuantumState spin_superposition(const std::vector<Complex>& coeffs, double hbar = 1.0);

/// Real 2D Gaussian wavefunction parameters; requires a > 0, c > 0 and
/// D = ac - b^2 > 0.
struct Gaussian2dParams {
    double a = 1.0;
    double b = 0.0;
    double c = 1.0;
};

/// Two-mode Gaussian state of the real 2D wavefunction with exponent
/// -(a x^2 + 2 b x y + c y^2)/2.
GaussianState gaussian2d_state(const Gaussian2dParams& params, double hbar = 1.0);

/// MomentSet of the tuple (x, p_x, y, p_y) for the 2D Gaussian wavefunction.
MomentSet gaussian2d_moments(const Gaussian2dParams& params, double hbar = 1.0);

// -- analytic tuple builders on Gaussian states -------------------------------

/// MomentSet of the phase-space tuple (x1, p1, ..., xn, pn): X is the
/// covariance matrix, Y = (hbar/2) Omega.
MomentSet phase_space_moments(const GaussianState& gs);

/// MomentSet of the triple (x, p, xi = x + p) for a single-mode Gaussian
/// state, by linearity of second moments.
MomentSet xpxi_moments(const GaussianState& gs);

// -- Fock-basis tuple builders -------------------------------------------------

/// Operators (x, p, xi = x + p) on a truncated Fock space.
std::vector<Operator> xpxi_operators(int dim, double hbar = 1.0);

/// Two uncoupled modes on a dim x dim tensor-product Fock space:
/// (x1, p1, x2, p2) as Kronecker products with the identity.
std::vector<Operator> two_mode_operators(int dim_per_mode, double hbar = 1.0);

/// |0> tensor |0> on the tensor-product space.
QuantumState two_mode_vacuum(int dim_per_mode, double hbar = 1.0);

}  // namespace varunc
