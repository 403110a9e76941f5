#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "varunc/moments.hpp"

namespace varunc {

/// Uniform result of one inequality evaluation.  margin = lhs - rhs; the
/// satisfied flag allows an absolute slack of tol.ineq.  margin_rel rescales
/// the margin by max(|lhs|, |rhs|, 1) for scale-free comparisons.  Reports
/// print 1-based indices; tuples are 0-based in code.
struct InequalityReport {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double margin_rel = 0.0;
    bool satisfied = false;
    std::vector<double> params;
    int n_required = 0;
};

/// Scalar combinations entering the four-observable bounds.
/// P is the product of the four variances, Psi mixes squared commutator
/// means with complementary variance pairs, PsiStar keeps commutator means
/// only, and Lambda = |Y12 Y34 + Y23 Y14 + Y31 Y24| (ordering invariant).
struct FourTupleDerived {
    double P = 0.0;
    double Psi = 0.0;
    double PsiStar = 0.0;
    double Lambda = 0.0;
};

struct PfaffianCheck {
    double det_y = 0.0;
    double lambda_sq = 0.0;
};

// -- pair bounds (any tuple size, distinct indices j, k) --------------------

/// X_jj X_kk >= Y_jk^2
InequalityReport eval_robertson_pair(const MomentSet& ms, int j, int k, const Tolerances& tol = {});

/// X_jj X_kk >= X_jk^2 + Y_jk^2
InequalityReport eval_schrodinger_pair(const MomentSet& ms, int j, int k,
                                       const Tolerances& tol = {});

// -- full determinant positivity --------------------------------------------

/// det(X + iY) >= 0, the fundamental positivity condition for any tuple size.
InequalityReport eval_detF(const MomentSet& ms, const Tolerances& tol = {});

/// Three-observable determinant condition written as a variance-product bound;
/// its margin equals det(X + iY) up to rearrangement.
InequalityReport eval_n3_det(const MomentSet& ms, const Tolerances& tol = {});

// -- three observables, covariance-free -------------------------------------

/// X11 X22 X33 >= X11 Y23^2 + X22 Y13^2 + X33 Y12^2.  This bound is NOT a
/// theorem: specific states violate it, which is why it is kept around under
/// the id "eq5-INCORRECT".  A failed satisfied flag here is expected.
InequalityReport eval_false5(const MomentSet& ms, const Tolerances& tol = {});

/// Weighted sum bound for arbitrary real weights alpha:
/// sum alpha_k^2 X_kk >= 2 sqrt(sum over pairs of (alpha_j alpha_k Y_jk)^2).
InequalityReport eval_gen3(const MomentSet& ms, const std::array<double, 3>& alphas,
                           const Tolerances& tol = {});

/// Unit-weight case: X11 + X22 + X33 >= 2 sqrt(Y12^2 + Y23^2 + Y13^2).
InequalityReport eval_sum3(const MomentSet& ms, const Tolerances& tol = {});

/// Weaker companion of the sum bound: rhs = |Y12| + |Y23| + |Y13|.
InequalityReport eval_sum3_robertson(const MomentSet& ms, const Tolerances& tol = {});

/// Power-weighted sum bound with weights alpha_k^2 = X_kk^n_exp.
InequalityReport eval_sum3_power(const MomentSet& ms, double n_exp, const Tolerances& tol = {});

/// Product bound: X11 X22 X33 >= (4/9)(X11 Y23^2 + X22 Y13^2 + X33 Y12^2).
InequalityReport eval_prod3(const MomentSet& ms, const Tolerances& tol = {});

/// Pair-product bound through a third observable:
/// sqrt(X11 X22) >= sqrt((2 Y12 / 3)^2 + B^2) + B with B = 4|Y13 Y23|/(9 X33).
InequalityReport eval_pair_bound13(const MomentSet& ms, const Tolerances& tol = {});

/// Specialization useful when Y12 vanishes: sqrt(X11 X22) >= 8|Y13 Y23|/(9 X33).
InequalityReport eval_zero_comm(const MomentSet& ms, const Tolerances& tol = {});

// -- four observables --------------------------------------------------------

FourTupleDerived four_derived(const MomentSet& ms);

/// Determinant positivity of the four-observable construction:
/// (g^2 - 4V)^2 >= 64 (xi1 xi2 xi3 xi4)^2 Lambda^2 with g = sum xi_k^2 X_kk
/// and V = sum over pairs of (xi_j xi_k Y_jk)^2.
InequalityReport eval_main4(const MomentSet& ms, const std::array<double, 4>& xis,
                            const Tolerances& tol = {});

/// Unit-weight form: |(sum X_kk)^2 - 4 sum Y_jk^2| >= 8 Lambda.
InequalityReport eval_sum4(const MomentSet& ms, const Tolerances& tol = {});

/// Product form: 8P >= 2 Psi + Lambda^2 + Lambda sqrt(4 Psi + Lambda^2).
InequalityReport eval_prod4(const MomentSet& ms, const Tolerances& tol = {});

/// Product form with Psi replaced by PsiStar (weaker, variance-free rhs).
InequalityReport eval_prod4_star(const MomentSet& ms, const Tolerances& tol = {});

/// Chained bound prod X_kk >= det X >= det Y, reported with the binding
/// (smaller) of the two margins; lhs/rhs show the binding pair and params
/// carries [prod X_kk, det X, det Y].
InequalityReport eval_robertson_det(const MomentSet& ms, const Tolerances& tol = {});

/// det Y and Lambda^2 for a four-tuple; the two agree identically for any
/// antisymmetric Y (Pfaffian identity).
PfaffianCheck lambda_pfaffian_identity(const MomentSet& ms);

// -- catalog ------------------------------------------------------------------

struct CatalogEntry {
    std::string id;
    int n_required = 0;  // 0 = any tuple size
    std::string description;
};

/// All inequality ids this library evaluates, with short role descriptions.
const std::vector<CatalogEntry>& inequality_catalog();

}  // namespace varunc
