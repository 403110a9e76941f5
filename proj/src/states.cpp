#include "varunc/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace varunc {

namespace {

MatrixXcd lowering_operator(int dim) {
    MatrixXcd a = MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace

FockPair fock_pair(int dim, double hbar) {
    if (dim < 2) throw std::invalid_argument("fock_pair: dim must be >= 2");
    if (hbar <= 0.0) throw std::invalid_argument("fock_pair: hbar must be positive");
    const MatrixXcd a = lowering_operator(dim);
    const MatrixXcd adag = a.adjoint();
    const double scale = std::sqrt(hbar / 2.0);
    MatrixXcd x = scale * (a + adag);
    MatrixXcd p = Complex(0.0, scale) * (adag - a);
    return FockPair{dim, Operator(std::move(x), "x"), Operator(std::move(p), "p"), hbar};
}

QuantumState fock_vacuum(int dim, double hbar) {
    VectorXcd v = VectorXcd::Zero(dim);
    v(0) = 1.0;
    return QuantumState::pure(std::move(v), hbar);
}

GaussianState ccs_moments(const CcsParams& params, double hbar) {
    if (params.sigma <= 0.0) throw std::invalid_argument("ccs_moments: sigma must be positive");
    if (!(params.r > -1.0 && params.r < 1.0)) {
        throw std::invalid_argument("ccs_moments: r must lie in (-1, 1)");
    }
    const double one_minus_r2 = 1.0 - params.r * params.r;
    const double r_tilde = params.r / std::sqrt(one_minus_r2);
    const double sxx = params.sigma;
    const double spp = hbar * hbar / (4.0 * params.sigma * one_minus_r2);
    const double sxp = hbar * params.r / (2.0 * std::sqrt(one_minus_r2));
    const double sqrt_sigma = std::sqrt(params.sigma);
    const double mean_x = 2.0 * sqrt_sigma * params.alpha.real();
    const double mean_p =
        (hbar / sqrt_sigma) * (params.alpha.imag() + r_tilde * params.alpha.real());
    return GaussianState::single_mode(sxx, spp, sxp, mean_x, mean_p, hbar);
}

namespace {

// Fock coefficients of the normalized Gaussian wavefunction
//   psi(x) ~ exp(-lambda x^2 / 2 + mu x)
// via the ladder recurrence (lambda hbar + 1) a + (lambda hbar - 1) a+ acting
// as sqrt(2 hbar) mu on the state.  Stable because |lambda hbar - 1| <
// |lambda hbar + 1| whenever Re lambda > 0.
VectorXcd gaussian_fock_coefficients(Complex lambda, Complex mu, int dim, double hbar) {
    const Complex a_coef = lambda * hbar + 1.0;
    const Complex b_coef = lambda * hbar - 1.0;
    const Complex c_coef = std::sqrt(2.0 * hbar) * mu;

    const int n_ext = std::max(2 * dim, dim + 40);
    VectorXcd coeff = VectorXcd::Zero(n_ext);
    coeff(0) = 1.0;
    coeff(1) = c_coef * coeff(0) / a_coef;
    for (int n = 1; n + 1 < n_ext; ++n) {
        coeff(n + 1) =
            (c_coef * coeff(n) - b_coef * std::sqrt(static_cast<double>(n)) * coeff(n - 1)) /
            (a_coef * std::sqrt(static_cast<double>(n + 1)));
    }

    const double total = coeff.squaredNorm();
    double head = 0.0;
    int sufficient = -1;
    for (int n = 0; n < n_ext; ++n) {
        head += std::norm(coeff(n));
        if (sufficient < 0 && (total - head) / total < 1e-8) {
            sufficient = n + 1;
            break;
        }
    }
    if (sufficient < 0 || sufficient > dim) {
        throw std::runtime_error(
            "truncation error: tail weight above 1e-8 at dim " + std::to_string(dim) +
            "; use dim >= " +
            (sufficient > 0 ? std::to_string(sufficient) : std::to_string(n_ext) + " (or more)"));
    }
    VectorXcd out = coeff.head(dim);
    out.normalize();
    return out;
}

}  // namespace

QuantumState ccs_state(const CcsParams& params, int dim, double hbar) {
    if (dim < 2) throw std::invalid_argument("ccs_state: dim must be >= 2");
    if (params.sigma <= 0.0 || !(params.r > -1.0 && params.r < 1.0)) {
        throw std::invalid_argument("ccs_state: invalid sigma or r");
    }
    const double r_tilde = params.r / std::sqrt(1.0 - params.r * params.r);
    const Complex lambda = Complex(1.0, -r_tilde) / (2.0 * params.sigma);
    const Complex mu = params.alpha / std::sqrt(params.sigma);
    return QuantumState::pure(gaussian_fock_coefficients(lambda, mu, dim, hbar), hbar);
}

QuantumState gaussian_pure_to_fock(const GaussianState& gs, int dim) {
    if (gs.n_modes != 1) throw std::invalid_argument("gaussian_pure_to_fock: single mode only");
    const double u = gs.sxx(), v = gs.spp(), s = gs.sxp();
    const double det = u * v - s * s;
    const double target = gs.hbar * gs.hbar / 4.0;
    if (std::fabs(det - target) > 1e-9 * target) {
        throw std::invalid_argument("gaussian_pure_to_fock: covariance is not pure (det cov != "
                                    "hbar^2/4)");
    }
    CcsParams params;
    params.sigma = u;
    params.r = s / std::sqrt(u * v);
    const double r_tilde = params.r / std::sqrt(1.0 - params.r * params.r);
    const double sqrt_sigma = std::sqrt(params.sigma);
    const double re_alpha = gs.means(0) / (2.0 * sqrt_sigma);
    const double im_alpha = sqrt_sigma * gs.means(1) / gs.hbar - r_tilde * re_alpha;
    params.alpha = Complex(re_alpha, im_alpha);
    return ccs_state(params, dim, gs.hbar);
}

QuantumState thermal_state(double sigma_th, int dim, double hbar) {
    if (sigma_th < hbar / 2.0) {
        throw std::invalid_argument("thermal_state: sigma_th must be >= hbar/2");
    }
    const double n_bar = sigma_th / hbar - 0.5;
    MatrixXcd rho = MatrixXcd::Zero(dim, dim);
    if (n_bar < 1e-15) {
        rho(0, 0) = 1.0;
    } else {
        const double q = n_bar / (n_bar + 1.0);
        double w = 1.0, total = 0.0;
        for (int n = 0; n < dim; ++n, w *= q) {
            rho(n, n) = w;
            total += w;
        }
        rho /= total;
    }
    return QuantumState::mixed(std::move(rho), hbar);
}

SpinOperators spin_operators(int two_j, double hbar) {
    if (two_j < 1) throw std::invalid_argument("spin_operators: two_j must be >= 1");
    const int dim = two_j + 1;
    const double j = two_j / 2.0;
    MatrixXcd lz = MatrixXcd::Zero(dim, dim);
    MatrixXcd lp = MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double m = j - i;
        lz(i, i) = hbar * m;
        if (i > 0) lp(i - 1, i) = hbar * std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    const MatrixXcd lm = lp.adjoint();
    MatrixXcd lx = (lp + lm) / 2.0;
    MatrixXcd ly = (lp - lm) / Complex(0.0, 2.0);
    return SpinOperators{Operator(std::move(lx), "Lx"), Operator(std::move(ly), "Ly"),
                         Operator(std::move(lz), "Lz")};
}

QuantumState spin_superposition(const std::vector<Complex>& coeffs, double hbar) {
    VectorXcd v(static_cast<Eigen::Index>(coeffs.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = coeffs[static_cast<size_t>(i)];
    const double norm = v.norm();
    if (norm < 1e-12) throw std::invalid_argument("spin_superposition: zero norm");
    v /= norm;
    return QuantumState::pure(std::move(v), hbar);
}

GaussianState gaussian2d_state(const Gaussian2dParams& params, double hbar) {
    const double a = params.a, b = params.b, c = params.c;
    const double det = a * c - b * b;
    if (a <= 0.0 || c <= 0.0 || det <= 0.0) {
        throw std::invalid_argument("gaussian2d: need a > 0, c > 0 and ac - b^2 > 0");
    }
    GaussianState gs;
    gs.n_modes = 2;
    gs.hbar = hbar;
    gs.means = VectorXd::Zero(4);
    gs.cov = MatrixXd::Zero(4, 4);
    // position block: inverse of the exponent matrix over 2
    gs.cov(0, 0) = c / (2.0 * det);
    gs.cov(2, 2) = a / (2.0 * det);
    gs.cov(0, 2) = gs.cov(2, 0) = -b / (2.0 * det);
    // momentum block: exponent matrix times hbar^2 / 2
    gs.cov(1, 1) = a * hbar * hbar / 2.0;
    gs.cov(3, 3) = c * hbar * hbar / 2.0;
    gs.cov(1, 3) = gs.cov(3, 1) = b * hbar * hbar / 2.0;
    gs.validate();
    return gs;
}

MomentSet gaussian2d_moments(const Gaussian2dParams& params, double hbar) {
    return phase_space_moments(gaussian2d_state(params, hbar));
}

MomentSet phase_space_moments(const GaussianState& gs) {
    gs.validate();
    MomentSet ms;
    ms.n = 2 * gs.n_modes;
    ms.hbar = gs.hbar;
    ms.means = gs.means;
    ms.X = gs.cov;
    ms.Y = (gs.hbar / 2.0) * GaussianState::symplectic_form(gs.n_modes);
    return ms;
}

MomentSet xpxi_moments(const GaussianState& gs) {
    if (gs.n_modes != 1) throw std::invalid_argument("xpxi_moments: single mode only");
    gs.validate();
    const double u = gs.sxx(), v = gs.spp(), s = gs.sxp();
    const double h = gs.hbar;
    MomentSet ms;
    ms.n = 3;
    ms.hbar = h;
    ms.means = VectorXd(3);
    ms.means << gs.means(0), gs.means(1), gs.means(0) + gs.means(1);
    ms.X = MatrixXd(3, 3);
    ms.X << u, s, u + s, s, v, s + v, u + s, s + v, u + 2.0 * s + v;
    ms.Y = MatrixXd(3, 3);
    ms.Y << 0.0, h / 2.0, h / 2.0, -h / 2.0, 0.0, -h / 2.0, -h / 2.0, h / 2.0, 0.0;
    return ms;
}

std::vector<Operator> xpxi_operators(int dim, double hbar) {
    FockPair fp = fock_pair(dim, hbar);
    MatrixXcd xi = fp.x.matrix() + fp.p.matrix();
    return {fp.x, fp.p, Operator(std::move(xi), "xi")};
}

std::vector<Operator> two_mode_operators(int dim_per_mode, double hbar) {
    FockPair fp = fock_pair(dim_per_mode, hbar);
    const MatrixXcd id = MatrixXcd::Identity(dim_per_mode, dim_per_mode);
    return {Operator(kron(fp.x.matrix(), id), "x1"), Operator(kron(fp.p.matrix(), id), "p1"),
            Operator(kron(id, fp.x.matrix()), "x2"), Operator(kron(id, fp.p.matrix()), "p2")};
}

QuantumState two_mode_vacuum(int dim_per_mode, double hbar) {
    VectorXcd v = VectorXcd::Zero(dim_per_mode * dim_per_mode);
    v(0) = 1.0;
    return QuantumState::pure(std::move(v), hbar);
}

}  // namespace varunc
