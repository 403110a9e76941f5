#include "varunc/inequalities.hpp"

#include <cmath>
#include <stdexcept>

namespace varunc {

namespace {

InequalityReport make_report(std::string id, double lhs, double rhs, int n_required,
                             const Tolerances& tol, std::vector<double> params = {}) {
    if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
        throw std::runtime_error("inequality '" + id + "': non-finite side");
    }
    InequalityReport r;
    r.id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = lhs - rhs;
    r.margin_rel = r.margin / std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
    r.satisfied = r.margin >= -tol.ineq;
    r.params = std::move(params);
    r.n_required = n_required;
    return r;
}

void require_n(const MomentSet& ms, int n, const char* what) {
    if (ms.n != n) {
        throw std::invalid_argument(std::string(what) + ": tuple size " + std::to_string(ms.n) +
                                    ", need " + std::to_string(n));
    }
}

void require_pair(const MomentSet& ms, int j, int k, const char* what) {
    if (j < 0 || k < 0 || j >= ms.n || k >= ms.n) {
        throw std::out_of_range(std::string(what) + ": index out of range");
    }
    if (j == k) throw std::invalid_argument(std::string(what) + ": indices must differ");
}

}  // namespace

InequalityReport eval_robertson_pair(const MomentSet& ms, int j, int k, const Tolerances& tol) {
    require_pair(ms, j, k, "robertson-pair");
    const double lhs = ms.X(j, j) * ms.X(k, k);
    const double rhs = ms.Y(j, k) * ms.Y(j, k);
    return make_report("robertson-pair", lhs, rhs, 0, tol,
                       {static_cast<double>(j + 1), static_cast<double>(k + 1)});
}

InequalityReport eval_schrodinger_pair(const MomentSet& ms, int j, int k, const Tolerances& tol) {
    require_pair(ms, j, k, "schrodinger-pair");
    const double lhs = ms.X(j, j) * ms.X(k, k);
    const double rhs = schrodinger_bound(ms, j, k);
    return make_report("schrodinger-pair", lhs, rhs, 0, tol,
                       {static_cast<double>(j + 1), static_cast<double>(k + 1)});
}

InequalityReport eval_detF(const MomentSet& ms, const Tolerances& tol) {
    const Complex det = ms.f_matrix().determinant();
    if (std::fabs(det.imag()) >= 1e-9) {
        throw std::runtime_error("det-f: imaginary residue " + std::to_string(det.imag()));
    }
    return make_report("det-f", det.real(), 0.0, 0, tol);
}

InequalityReport eval_n3_det(const MomentSet& ms, const Tolerances& tol) {
    require_n(ms, 3, "n3-det");
    const double x11 = ms.X(0, 0), x22 = ms.X(1, 1), x33 = ms.X(2, 2);
    const double x12 = ms.X(0, 1), x13 = ms.X(0, 2), x23 = ms.X(1, 2);
    const double x31 = x13;
    const double y12 = ms.Y(0, 1), y13 = ms.Y(0, 2), y23 = ms.Y(1, 2);
    const double y31 = -y13;
    const double lhs = x11 * x22 * x33;
    const double rhs = x11 * (x23 * x23 + y23 * y23) + x22 * (x13 * x13 + y13 * y13) +
                       x33 * (x12 * x12 + y12 * y12) - 2.0 * x12 * x23 * x31 +
                       2.0 * (x12 * y23 * y31 + x23 * y31 * y12 + x31 * y12 * y23);
    return make_report("n3-det", lhs, rhs, 3, tol);
}

InequalityReport eval_false5(const MomentSet& ms, const Tolerances& tol) {
    require_n(ms, 3, "eq5-INCORRECT");
    const double lhs = ms.X(0, 0) * ms.X(1, 1) * ms.X(2, 2);
    const double rhs = ms.X(0, 0) * ms.Y(1, 2) * ms.Y(1, 2) +
                       ms.X(1, 1) * ms.Y(0, 2) * ms.Y(0, 2) +
                       ms.X(2, 2) * ms.Y(0, 1) * ms.Y(0, 1);
    // Violation is expected for some states; the id flags that this relation
    // is not a valid bound.
    return make_report("eq5-INCORRECT", lhs, rhs, 3, tol);
}

InequalityReport eval_gen3(const MomentSet& ms, const std::array<double, 3>& alphas,
                           const Tolerances& tol) {
    require_n(ms, 3, "gen3-weighted");
    const double a1 = alphas[0], a2 = alphas[1], a3 = alphas[2];
    const double lhs =
        a1 * a1 * ms.X(0, 0) + a2 * a2 * ms.X(1, 1) + a3 * a3 * ms.X(2, 2);
    const double t12 = a1 * a2 * ms.Y(0, 1);
    const double t23 = a2 * a3 * ms.Y(1, 2);
    const double t13 = a1 * a3 * ms.Y(0, 2);
    const double rhs = 2.0 * std::sqrt(t12 * t12 + t23 * t23 + t13 * t13);
    return make_report("gen3-weighted", lhs, rhs, 3, tol, {a1, a2, a3});
}

InequalityReport eval_sum3(const MomentSet& ms, const Tolerances& tol) {
    require_n(ms, 3, "sum3");
    const double lhs = ms.X(0, 0) + ms.X(1, 1) + ms.X(2, 2);
    const double rhs = 2.0 * std::sqrt(ms.Y(0, 1) * ms.Y(0, 1) + ms.Y(1, 2) * ms.Y(1, 2) +
                                       ms.Y(0, 2) * ms.Y(0, 2));
    return make_report("sum3", lhs, rhs, 3, tol);
}

InequalityReport eval_sum3_robertson(const MomentSet& ms, const Tolerances& tol) {
    require_n(ms, 3, "sum3-robertson");
    const double lhs = ms.X(0, 0) + ms.X(1, 1) + ms.X(2, 2);
    const double rhs = std::fabs(ms.Y(0, 1)) + std::fabs(ms.Y(1, 2)) + std::fabs(ms.Y(0, 2));
    return make_report("sum3-robertson", lhs, rhs, 3, tol);
}

InequalityReport eval_sum3_power(const MomentSet& ms, double n_exp, const Tolerances& tol) {
    require_n(ms, 3, "sum3-power");
    if (n_exp < 0.0) throw std::invalid_argument("sum3-power: exponent must be nonnegative");
    const double x11 = ms.X(0, 0), x22 = ms.X(1, 1), x33 = ms.X(2, 2);
    const bool fractional = n_exp != std::floor(n_exp);
    if (fractional && (x11 < 0.0 || x22 < 0.0 || x33 < 0.0)) {
        throw std::domain_error("sum3-power: negative variance with fractional exponent");
    }
    auto pown = [n_exp](double v) { return std::pow(v, n_exp); };
    const double lhs = std::pow(x11, n_exp + 1.0) + std::pow(x22, n_exp + 1.0) +
                       std::pow(x33, n_exp + 1.0);
    const double rhs =
        2.0 * std::sqrt(ms.Y(0, 1) * ms.Y(0, 1) * pown(x11) * pown(x22) +
                        ms.Y(1, 2) * ms.Y(1, 2) * pown(x33) * pown(x22) +
                        ms.Y(0, 2) * ms.Y(0, 2) * pown(x11) * pown(x33));
    return make_report("sum3-power", lhs, rhs, 3, tol, {n_exp});
}

InequalityReport eval_prod3(const MomentSet& ms, const Tolerances& tol) {
    require_n(ms, 3, "prod3");
    const double lhs = ms.X(0, 0) * ms.X(1, 1) * ms.X(2, 2);
    const double rhs = (4.0 / 9.0) * (ms.X(0, 0) * ms.Y(1, 2) * ms.Y(1, 2) +
                                      ms.X(1, 1) * ms.Y(0, 2) * ms.Y(0, 2) +
                                      ms.X(2, 2) * ms.Y(0, 1) * ms.Y(0, 1));
    return make_report("prod3", lhs, rhs, 3, tol);
}

InequalityReport eval_pair_bound13(const MomentSet& ms, const Tolerances& tol) {
    require_n(ms, 3, "pair-bound13");
    const double x33 = ms.X(2, 2);
    if (x33 <= 0.0) {
        throw std::domain_error("pair-bound13: X33 must be positive (degenerate denominator)");
    }
    const double lhs = std::sqrt(ms.X(0, 0) * ms.X(1, 1));
    const double b = 4.0 * std::fabs(ms.Y(0, 2) * ms.Y(1, 2)) / (9.0 * x33);
    const double t = 2.0 * ms.Y(0, 1) / 3.0;
    const double rhs = std::sqrt(t * t + b * b) + b;
    return make_report("pair-bound13", lhs, rhs, 3, tol, {b});
}

InequalityReport eval_zero_comm(const MomentSet& ms, const Tolerances& tol) {
    require_n(ms, 3, "zero-comm");
    const double x33 = ms.X(2, 2);
    if (x33 <= 0.0) {
        throw std::domain_error("zero-comm: X33 must be positive (degenerate denominator)");
    }
    const double lhs = std::sqrt(ms.X(0, 0) * ms.X(1, 1));
    const double rhs = 8.0 * std::fabs(ms.Y(0, 2) * ms.Y(1, 2)) / (9.0 * x33);
    // params[0] reports Y12 so callers can see how far the intended
    // zero-commutator case is from holding.
    return make_report("zero-comm", lhs, rhs, 3, tol, {ms.Y(0, 1)});
}

FourTupleDerived four_derived(const MomentSet& ms) {
    require_n(ms, 4, "four_derived");
    const double x11 = ms.X(0, 0), x22 = ms.X(1, 1), x33 = ms.X(2, 2), x44 = ms.X(3, 3);
    const double y12 = ms.Y(0, 1), y13 = ms.Y(0, 2), y14 = ms.Y(0, 3);
    const double y23 = ms.Y(1, 2), y24 = ms.Y(1, 3), y34 = ms.Y(2, 3);
    const double y31 = -y13;
    FourTupleDerived d;
    d.P = x11 * x22 * x33 * x44;
    d.Psi = y12 * y12 * x33 * x44 + y13 * y13 * x22 * x44 + y14 * y14 * x33 * x22 +
            y23 * y23 * x11 * x44 + y24 * y24 * x33 * x11 + y34 * y34 * x11 * x22;
    d.PsiStar = 2.0 * (y12 * y12 * y34 * y34 + y23 * y23 * y14 * y14 + y31 * y31 * y24 * y24);
    d.Lambda = std::fabs(y12 * y34 + y23 * y14 + y31 * y24);
    return d;
}

InequalityReport eval_main4(const MomentSet& ms, const std::array<double, 4>& xis,
                            const Tolerances& tol) {
    require_n(ms, 4, "main4");
    double g = 0.0;
    for (int k = 0; k < 4; ++k) g += xis[k] * xis[k] * ms.X(k, k);
    double v = 0.0;
    for (int j = 0; j < 4; ++j) {
        for (int k = j + 1; k < 4; ++k) {
            const double t = xis[j] * xis[k] * ms.Y(j, k);
            v += t * t;
        }
    }
    const double lhs = (g * g - 4.0 * v) * (g * g - 4.0 * v);
    const double xi_prod = xis[0] * xis[1] * xis[2] * xis[3];
    const double lambda = four_derived(ms).Lambda;
    const double rhs = 64.0 * xi_prod * xi_prod * lambda * lambda;
    return make_report("main4", lhs, rhs, 4, tol, {xis[0], xis[1], xis[2], xis[3]});
}

InequalityReport eval_sum4(const MomentSet& ms, const Tolerances& tol) {
    require_n(ms, 4, "sum4");
    double sum_x = 0.0;
    for (int k = 0; k < 4; ++k) sum_x += ms.X(k, k);
    double sum_y2 = 0.0;
    for (int j = 0; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) sum_y2 += ms.Y(j, k) * ms.Y(j, k);
    const double lhs = std::fabs(sum_x * sum_x - 4.0 * sum_y2);
    const double rhs = 8.0 * four_derived(ms).Lambda;
    return make_report("sum4", lhs, rhs, 4, tol);
}

InequalityReport eval_prod4(const MomentSet& ms, const Tolerances& tol) {
    require_n(ms, 4, "prod4");
    const FourTupleDerived d = four_derived(ms);
    const double lhs = 8.0 * d.P;
    const double rhs =
        2.0 * d.Psi + d.Lambda * d.Lambda +
        d.Lambda * std::sqrt(4.0 * d.Psi + d.Lambda * d.Lambda);
    return make_report("prod4", lhs, rhs, 4, tol);
}

InequalityReport eval_prod4_star(const MomentSet& ms, const Tolerances& tol) {
    require_n(ms, 4, "prod4-star");
    const FourTupleDerived d = four_derived(ms);
    const double lhs = 8.0 * d.P;
    const double rhs =
        2.0 * d.PsiStar + d.Lambda * d.Lambda +
        d.Lambda * std::sqrt(4.0 * d.PsiStar + d.Lambda * d.Lambda);
    return make_report("prod4-star", lhs, rhs, 4, tol);
}

InequalityReport eval_robertson_det(const MomentSet& ms, const Tolerances& tol) {
    double prod_diag = 1.0;
    for (int k = 0; k < ms.n; ++k) prod_diag *= ms.X(k, k);
    const double det_x = ms.X.determinant();
    const double det_y = ms.Y.determinant();
    const double margin1 = prod_diag - det_x;
    const double margin2 = det_x - det_y;
    InequalityReport r;
    // The binding side defines (lhs, rhs); both legs are kept in params.
    if (margin1 <= margin2) {
        r = make_report("robertson-det", prod_diag, det_x, 0, tol, {prod_diag, det_x, det_y});
    } else {
        r = make_report("robertson-det", det_x, det_y, 0, tol, {prod_diag, det_x, det_y});
    }
    return r;
}

PfaffianCheck lambda_pfaffian_identity(const MomentSet& ms) {
    require_n(ms, 4, "lambda_pfaffian_identity");
    PfaffianCheck c;
    c.det_y = ms.Y.determinant();
    const double lambda = four_derived(ms).Lambda;
    c.lambda_sq = lambda * lambda;
    return c;
}

const std::vector<CatalogEntry>& inequality_catalog() {
    static const std::vector<CatalogEntry> catalog = {
        {"robertson-pair", 0, "variance product of a pair bounded by the squared commutator mean"},
        {"schrodinger-pair", 0,
         "variance product of a pair bounded by covariance plus commutator terms"},
        {"det-f", 0, "determinant positivity of the full moment matrix X + iY"},
        {"n3-det", 3, "three-observable determinant condition as a variance-product bound"},
        {"eq5-INCORRECT", 3,
         "covariance-free triple product bound WITHOUT the 4/9 factor; not a theorem, kept as a "
         "counterexample target"},
        {"gen3-weighted", 3, "weighted variance-sum bound for three observables, arbitrary real "
                             "weights"},
        {"sum3", 3, "variance sum of a triple bounded by twice the commutator-mean norm"},
        {"sum3-robertson", 3,
         "weaker variance-sum bound with the sum of absolute commutator means"},
        {"sum3-power", 3, "power-weighted variance-sum bound, weights X_kk^n"},
        {"prod3", 3, "covariance-free triple variance product bound with the 4/9 factor"},
        {"pair-bound13", 3,
         "pair uncertainty product bounded through the commutators with a third observable"},
        {"zero-comm", 3,
         "pair uncertainty product bound for vanishing pair commutator mean, via a third "
         "observable"},
        {"main4", 4, "four-observable determinant positivity with arbitrary real weights"},
        {"sum4", 4, "unit-weight four-observable sum form"},
        {"prod4", 4, "four-variance product bound with mixed variance-commutator rhs"},
        {"prod4-star", 4, "four-variance product bound with commutator-only rhs"},
        {"robertson-det", 0,
         "chained bound: product of variances >= det X >= det Y (binding margin reported)"},
    };
    return catalog;
}

}  // namespace varunc
