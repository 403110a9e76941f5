#pragma once

#include <vector>

#include "varunc/operators.hpp"

namespace varunc {

/// Second-moment data of an ordered observable tuple in a fixed state:
/// means, the symmetric covariance matrix X (variances on the diagonal) and
/// the antisymmetric commutator matrix Y with Y_mn = (1/2i)<[z_m, z_n]>.
/// The Hermitian matrix X + iY is positive semi-definite for moments taken
/// from a physical state.
struct MomentSet {
    int n = 0;
    VectorXd means;
    MatrixXd X;
    MatrixXd Y;
    double hbar = 1.0;

    /// X + iY
    MatrixXcd f_matrix() const;
};

/// Builds the MomentSet of an ordered operator tuple.  With centered = true
/// (the default) the observables are shifted by their means before products
/// are formed, which avoids catastrophic cancellation for large means; with
/// centered = false the diagonal entries are the raw second moments <z_k^2>
/// and no shift is applied anywhere.
MomentSet moment_set(const QuantumState& state, const std::vector<Operator>& ops,
                     bool centered = true, const Tolerances& tol = {});

/// Squared pair bound G^2 = X_jk^2 + Y_jk^2 combining covariance and
/// commutator terms.
double schrodinger_bound(const MomentSet& ms, int j, int k);

}  // namespace varunc
