#include "varunc/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace varunc {

double hermiticity_defect(const MatrixXcd& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Operator::Operator(MatrixXcd matrix, std::string label, const Tolerances& tol)
    : matrix_(std::move(matrix)), label_(std::move(label)) {
    if (matrix_.rows() < 1 || matrix_.rows() != matrix_.cols()) {
        throw std::invalid_argument("Operator '" + label_ + "': matrix must be square, dim >= 1");
    }
    const double defect = hermiticity_defect(matrix_);
    if (defect > tol.herm) {
        throw std::invalid_argument("Operator '" + label_ + "': not Hermitian, defect " +
                                    std::to_string(defect));
    }
}

QuantumState::QuantumState(Kind kind, VectorXcd vec, MatrixXcd rho, double hbar)
    : kind_(kind),
      dim_(kind == Kind::Pure ? static_cast<int>(vec.size()) : static_cast<int>(rho.rows())),
      hbar_(hbar),
      vector_(std::move(vec)),
      rho_(std::move(rho)) {}

QuantumState QuantumState::pure(VectorXcd vec, double hbar, const Tolerances& tol) {
    if (vec.size() < 1) throw std::invalid_argument("pure state: empty vector");
    if (hbar <= 0.0) throw std::invalid_argument("pure state: hbar must be positive");
    const double norm = vec.norm();
    if (std::abs(norm - 1.0) > tol.herm) {
        throw std::invalid_argument("pure state: vector norm " + std::to_string(norm) +
                                    " is not 1");
    }
    return QuantumState(Kind::Pure, std::move(vec), MatrixXcd(), hbar);
}

QuantumState QuantumState::mixed(MatrixXcd rho, double hbar, const Tolerances& tol) {
    if (rho.rows() < 1 || rho.rows() != rho.cols()) {
        throw std::invalid_argument("mixed state: density matrix must be square");
    }
    if (hbar <= 0.0) throw std::invalid_argument("mixed state: hbar must be positive");
    if (hermiticity_defect(rho) > tol.herm) {
        throw std::invalid_argument("mixed state: density matrix not Hermitian");
    }
    const Complex tr = rho.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > tol.herm) {
        throw std::invalid_argument("mixed state: trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("mixed state: negative eigenvalue " +
                                    std::to_string(es.eigenvalues().minCoeff()));
    }
    return QuantumState(Kind::Mixed, VectorXcd(), std::move(rho), hbar);
}

const VectorXcd& QuantumState::vector() const {
    if (kind_ != Kind::Pure) throw std::logic_error("vector() called on a mixed state");
    return vector_;
}

const MatrixXcd& QuantumState::rho() const {
    if (kind_ != Kind::Mixed) throw std::logic_error("rho() called on a pure state");
    return rho_;
}

double expectation(const QuantumState& state, const Operator& op, const Tolerances& tol) {
    if (state.dim() != op.dim()) {
        throw std::invalid_argument("expectation: state dim " + std::to_string(state.dim()) +
                                    " != operator dim " + std::to_string(op.dim()));
    }
    Complex raw;
    if (state.kind() == QuantumState::Kind::Pure) {
        raw = state.vector().dot(op.matrix() * state.vector());
    } else {
        raw = (state.rho() * op.matrix()).trace();
    }
    if (std::abs(raw.imag()) >= tol.residue) {
        throw std::runtime_error("expectation of '" + op.label() + "': imaginary residue " +
                                 std::to_string(raw.imag()) + " exceeds threshold");
    }
    return raw.real();
}

MatrixXcd commutator(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("commutator: dimension mismatch " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
    }
    return a.matrix() * b.matrix() - b.matrix() * a.matrix();
}

PsdReport psd_check(const MatrixXcd& m, double tol_psd, const Tolerances& tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("psd_check: matrix must be square");
    if (hermiticity_defect(m) > tol.herm) {
        throw std::invalid_argument("psd_check: matrix not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    PsdReport report;
    report.min_eigenvalue = es.eigenvalues().minCoeff();
    report.tolerance = tol_psd;
    report.is_psd = report.min_eigenvalue >= -tol_psd;
    return report;
}

}  // namespace varunc
