#pragma once

#include "varunc/moments.hpp"

namespace varunc {

/// Analytic phase-space representation of a Gaussian state: means and the
/// 2n x 2n covariance matrix in (x1, p1, x2, p2, ...) ordering.  Physicality
/// means cov + (i hbar / 2) Omega is positive semi-definite, with Omega the
/// standard symplectic form.
struct GaussianState {
    int n_modes = 1;
    VectorXd means;  // 2n entries
    MatrixXd cov;    // 2n x 2n symmetric
    double hbar = 1.0;

    static GaussianState single_mode(double sigma_xx, double sigma_pp, double sigma_xp,
                                     double mean_x = 0.0, double mean_p = 0.0, double hbar = 1.0);

    double sxx() const { return cov(0, 0); }
    double spp() const { return cov(1, 1); }
    double sxp() const { return cov(0, 1); }

    /// Standard symplectic form for n_modes modes.
    static MatrixXd symplectic_form(int n_modes);

    /// Throws unless cov is symmetric and cov + (i hbar / 2) Omega is PSD.
    void validate(const Tolerances& tol = {}) const;
};

/// Fourth moment of zero-mean jointly Gaussian variables decoupled into pair
/// moments: <ABCD>_W = AB*CD + AC*BD + AD*BC.  Arguments are the six
/// symmetrized pair moments.
double wick_fourth(double ab, double cd, double ac, double bd, double ad, double bc);

/// MomentSet of the quadratic triple
///   z1 = (dp)^2,  z2 = (dx)^2,  z3 = (dp dx + dx dp)/2
/// in a single-mode Gaussian state, from closed-form pair-moment calculus.
/// Diagonal entries are central variances; off-diagonal X entries are the
/// plain symmetrized products <{z_j, z_k}>/2 without subtracting mean
/// products, matching the convention used alongside these operators.
MomentSet quad_triple_moments(const GaussianState& gs, const Tolerances& tol = {});

enum class OrderingCorrection {
    /// ordered (1/2)<x^2 p^2 + p^2 x^2> recovered from the symmetric moment
    X2P2SymFromOrdered,
    /// <(xp + px)^2> composed from ordered means plus the reordering shift
    XpPlusPxSq,
};

/// Evaluates one of the fixed reordering identities relating symmetric
/// (Wigner-Weyl) moments to means of concretely ordered products, on a
/// single-mode Gaussian state.
double symmetric_to_ordered(OrderingCorrection correction, const GaussianState& gs);

}  // namespace varunc
