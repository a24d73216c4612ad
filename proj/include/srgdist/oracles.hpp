#ifndef SRGDIST_ORACLES_HPP
#define SRGDIST_ORACLES_HPP

#include "srgdist/quadnum.hpp"

namespace srg {

/// Annihilating-polynomial oracle: true iff the product over the spectrum's
/// distinct eigenvalues of (M - mu*I) is the zero matrix, computed entirely
/// in integer matrices. A conjugate pair (p +- q*sqrt(delta))/2 folds into
/// the single quadratic factor M^2 - p*M + ((p^2 - q^2*delta)/4)*I; a
/// rational eigenvalue r/s contributes (s*M - r*I).
///
/// Throws NonIntegerFactorError when a quadratic factor's constant term is
/// not an integer (a malformed spectrum), OrderMismatchError when the
/// spectrum's total multiplicity differs from the matrix order.
bool annihilator_check(const IntMatrix& m, const Spectrum& spectrum);

/// Trace/Vandermonde oracle: solves sum_j m_j * mu_j^p = trace(M^p) for
/// p = 0..r-1 exactly over Q(sqrt(delta)) and returns the unique
/// multiplicities. Together with a passing annihilator_check this pins the
/// spectrum of M exactly (minimal polynomial plus power traces).
///
/// Throws NonIntegralSolutionError unless the solution consists of
/// nonnegative integers summing to the matrix order.
std::vector<long long> multiplicity_solve(const IntMatrix& m,
                                          const std::vector<QuadNum>& distinct_eigenvalues);

} // namespace srg

#endif
