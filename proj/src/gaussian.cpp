#include "varunc/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace varunc {

GaussianState GaussianState::single_mode(double sigma_xx, double sigma_pp, double sigma_xp,
                                         double mean_x, double mean_p, double hbar) {
    GaussianState gs;
    gs.n_modes = 1;
    gs.hbar = hbar;
    gs.means = VectorXd(2);
    gs.means << mean_x, mean_p;
    gs.cov = MatrixXd(2, 2);
    gs.cov << sigma_xx, sigma_xp, sigma_xp, sigma_pp;
    gs.validate();
    return gs;
}

MatrixXd GaussianState::symplectic_form(int n_modes) {
    MatrixXd omega = MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int m = 0; m < n_modes; ++m) {
        omega(2 * m, 2 * m + 1) = 1.0;
        omega(2 * m + 1, 2 * m) = -1.0;
    }
    return omega;
}

void GaussianState::validate(const Tolerances& tol) const {
    if (n_modes < 1) throw std::invalid_argument("GaussianState: n_modes must be >= 1");
    const int d = 2 * n_modes;
    if (means.size() != d || cov.rows() != d || cov.cols() != d) {
        throw std::invalid_argument("GaussianState: means/cov dimensions inconsistent");
    }
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > tol.herm) {
        throw std::invalid_argument("GaussianState: covariance not symmetric");
    }
    MatrixXcd phys = cov.cast<Complex>() +
                     Complex(0.0, hbar / 2.0) * symplectic_form(n_modes).cast<Complex>();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(phys, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol.psd) {
        throw std::invalid_argument("GaussianState: covariance violates physicality, min eig " +
                                    std::to_string(es.eigenvalues().minCoeff()));
    }
}

double wick_fourth(double ab, double cd, double ac, double bd, double ad, double bc) {
    return ab * cd + ac * bd + ad * bc;
}

MomentSet quad_triple_moments(const GaussianState& gs, const Tolerances& tol) {
    if (gs.n_modes != 1) throw std::invalid_argument("quad_triple_moments: single mode only");
    gs.validate(tol);
    const double u = gs.sxx();  // sigma_xx
    const double v = gs.spp();  // sigma_pp
    const double s = gs.sxp();  // sigma_xp
    const double h = gs.hbar;

    MomentSet ms;
    ms.n = 3;
    ms.hbar = h;
    ms.means = VectorXd(3);
    ms.means << v, u, s;

    ms.X = MatrixXd(3, 3);
    ms.Y = MatrixXd::Zero(3, 3);

    // Central variances; the fourth moments decouple via wick_fourth.
    ms.X(0, 0) = wick_fourth(v, v, v, v, v, v) - v * v;  // 2 sigma_pp^2
    ms.X(1, 1) = wick_fourth(u, u, u, u, u, u) - u * u;  // 2 sigma_xx^2
    // <(dp dx + dx dp)^2> = 4 sigma_pp sigma_xx + 8 sigma_xp^2 + hbar^2
    const double anticomm_sq = 4.0 * v * u + 8.0 * s * s + h * h;
    ms.X(2, 2) = 0.25 * anticomm_sq - s * s;

    // Plain symmetrized products (no mean-product subtraction):
    ms.X(0, 1) = ms.X(1, 0) = u * v + 2.0 * s * s - 0.5 * h * h;
    ms.X(0, 2) = ms.X(2, 0) = 3.0 * v * s;
    ms.X(1, 2) = ms.X(2, 1) = 3.0 * u * s;

    ms.Y(0, 1) = -2.0 * h * s;
    ms.Y(1, 0) = 2.0 * h * s;
    ms.Y(0, 2) = -h * v;
    ms.Y(2, 0) = h * v;
    ms.Y(1, 2) = h * u;
    ms.Y(2, 1) = -h * u;
    return ms;
}

double symmetric_to_ordered(OrderingCorrection correction, const GaussianState& gs) {
    if (gs.n_modes != 1) throw std::invalid_argument("symmetric_to_ordered: single mode only");
    const double u = gs.sxx();
    const double v = gs.spp();
    const double s = gs.sxp();
    const double h = gs.hbar;
    const double sym_x2p2 = wick_fourth(u, v, s, s, s, s);  // sigma_xx sigma_pp + 2 sigma_xp^2
    switch (correction) {
        case OrderingCorrection::X2P2SymFromOrdered:
            // symmetric moment minus the reordering shift gives the ordered mean
            return sym_x2p2 - 0.5 * h * h;
        case OrderingCorrection::XpPlusPxSq:
            // <(xp + px)^2> = 2 <x^2 p^2 + p^2 x^2> + 3 hbar^2
            return 2.0 * (2.0 * sym_x2p2 - h * h) + 3.0 * h * h;
    }
    throw std::invalid_argument("symmetric_to_ordered: unknown correction id");
}

}  // namespace varunc
