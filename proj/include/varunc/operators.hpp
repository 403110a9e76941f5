#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "varunc/tolerances.hpp"

namespace varunc {

using Complex = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;
using MatrixXd = Eigen::MatrixXd;
using VectorXd = Eigen::VectorXd;

/// A labelled Hermitian observable on a finite-dimensional Hilbert space.
/// Construction validates Hermiticity; instances are immutable afterwards.
class Operator {
  public:
    Operator(MatrixXcd matrix, std::string label, const Tolerances& tol = {});

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const MatrixXcd& matrix() const { return matrix_; }
    const std::string& label() const { return label_; }

  private:
    MatrixXcd matrix_;
    std::string label_;
};

/// Pure state vector or density matrix, with the action scale hbar attached.
/// Pure states are kept as vectors; the density matrix path covers mixed
/// states, whose validity (Hermitian, unit trace, nonnegative spectrum) is
/// checked on construction.
class QuantumState {
  public:
    enum class Kind { Pure, Mixed };

    static QuantumState pure(VectorXcd vec, double hbar = 1.0, const Tolerances& tol = {});
    static QuantumState mixed(MatrixXcd rho, double hbar = 1.0, const Tolerances& tol = {});

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    double hbar() const { return hbar_; }
    const VectorXcd& vector() const;
    const MatrixXcd& rho() const;

  private:
    QuantumState(Kind kind, VectorXcd vec, MatrixXcd rho, double hbar);

    Kind kind_;
    int dim_;
    double hbar_;
    VectorXcd vector_;
    MatrixXcd rho_;
};

struct PsdReport {
    double min_eigenvalue = 0.0;
    bool is_psd = false;
    double tolerance = 0.0;
};

/// max entrywise |m - m^dagger|
double hermiticity_defect(const MatrixXcd& m);

/// <psi|op|psi> for pure states, Tr(rho op) for mixed ones.  The imaginary
/// residue of the raw trace must stay below tol.residue; larger residues mean
/// the inputs are numerically corrupt and raise an error.
double expectation(const QuantumState& state, const Operator& op, const Tolerances& tol = {});

/// ab - ba.  Anti-Hermitian whenever a and b are Hermitian.
MatrixXcd commutator(const Operator& a, const Operator& b);

/// Smallest eigenvalue of a Hermitian matrix and the PSD verdict at the given
/// slack.  Uses a deterministic dense solver.
PsdReport psd_check(const MatrixXcd& m, double tol_psd, const Tolerances& tol = {});

}  // namespace varunc
