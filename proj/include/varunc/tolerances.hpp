#pragma once

namespace varunc {

/// Numerical slack used throughout the library.  The underlying relations are
/// exact; finite precision needs explicit thresholds.  Each field can be
/// overridden per call, the defaults are the library-wide contract.
struct Tolerances {
    double herm = 1e-12;     ///< max entrywise |M - M^dagger| accepted as Hermitian
    double psd = 1e-9;       ///< eigenvalue slack for positive semi-definiteness
    double residue = 1e-10;  ///< max imaginary residue discarded from real moments
    double ineq = 1e-9;      ///< absolute margin slack when flagging an inequality satisfied
};

}  // namespace varunc
