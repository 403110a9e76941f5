#include "varunc/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace varunc {

MatrixXcd MomentSet::f_matrix() const {
    return X.cast<Complex>() + Complex(0.0, 1.0) * Y.cast<Complex>();
}

namespace {

// <a b> for every ordered pair of the (possibly shifted) tuple.
MatrixXcd pair_products(const QuantumState& state, const std::vector<MatrixXcd>& mats) {
    const int n = static_cast<int>(mats.size());
    MatrixXcd g(n, n);
    if (state.kind() == QuantumState::Kind::Pure) {
        std::vector<VectorXcd> images(n);
        for (int k = 0; k < n; ++k) images[k] = mats[k] * state.vector();
        for (int m = 0; m < n; ++m)
            for (int l = 0; l < n; ++l) g(m, l) = images[m].dot(images[l]);
    } else {
        // Tr(rho a b) = Tr((a rho)^T . b^T)^... evaluated as sum_{ij} (rho a)_ij b_ji
        std::vector<MatrixXcd> rho_a(n);
        for (int k = 0; k < n; ++k) rho_a[k] = state.rho() * mats[k];
        for (int m = 0; m < n; ++m) {
            // Tr(rho a_m a_l) = Tr(a_l rho a_m) = sum_{ij} (rho a_m)_ij (a_l)_ji
            for (int l = 0; l < n; ++l)
                g(m, l) = (rho_a[m].array() * mats[l].transpose().array()).sum();
        }
    }
    return g;
}

}  // namespace

MomentSet moment_set(const QuantumState& state, const std::vector<Operator>& ops, bool centered,
                     const Tolerances& tol) {
    const int n = static_cast<int>(ops.size());
    if (n < 2 || n > 8) throw std::invalid_argument("moment_set: tuple size must be in [2, 8]");
    for (const auto& op : ops) {
        if (op.dim() != state.dim()) {
            throw std::invalid_argument("moment_set: operator '" + op.label() +
                                        "' dim does not match state dim");
        }
    }

    MomentSet ms;
    ms.n = n;
    ms.hbar = state.hbar();
    ms.means = VectorXd(n);
    for (int k = 0; k < n; ++k) ms.means(k) = expectation(state, ops[k], tol);

    std::vector<MatrixXcd> mats(n);
    for (int k = 0; k < n; ++k) {
        mats[k] = ops[k].matrix();
        if (centered) mats[k] -= ms.means(k) * MatrixXcd::Identity(state.dim(), state.dim());
    }

    MatrixXcd g = pair_products(state, mats);

    // g is Hermitian up to roundoff; the defect is the imaginary residue of
    // the real moment matrices.
    const double defect = (g - g.adjoint()).cwiseAbs().maxCoeff();
    if (defect >= tol.residue) {
        throw std::runtime_error("moment_set: residue " + std::to_string(defect) +
                                 " exceeds threshold; inputs numerically corrupt");
    }
    g = ((g + g.adjoint()) / 2.0).eval();

    ms.X = g.real();
    ms.Y = g.imag();
    return ms;
}

double schrodinger_bound(const MomentSet& ms, int j, int k) {
    if (j < 0 || k < 0 || j >= ms.n || k >= ms.n) {
        throw std::out_of_range("schrodinger_bound: index out of range");
    }
    const double x = ms.X(j, k);
    const double y = ms.Y(j, k);
    return x * x + y * y;
}

}  // namespace varunc
