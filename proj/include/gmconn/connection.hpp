#pragma once

#include <string>
#include <vector>

#include "gmconn/aomoto.hpp"

namespace gmconn {

struct ResonanceReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Weights suitable for the general position arrangement: no weight and no
/// negated total sum is a nonnegative integer.
ResonanceReport g_nonresonant(const std::vector<Q>& lambda);

/// Weights nonresonant for the given arrangement: no singleton weight, no
/// weight sum over the flat of a circuit avoiding n+1, and no negated total
/// sum is a nonnegative integer.
ResonanceReport t_nonresonant(const Arrangement& a, const std::vector<Q>& lambda);

/// Cohomology of the specialized complex in one degree: cocycles modulo
/// coboundaries, with deterministic representatives (the earliest cocycle
/// basis columns that are independent modulo the coboundaries).
struct CohomologyPresentation {
    int q = 0;
    QMat cocycles;      // columns span ker of the degree-q boundary (all of
                        // the space when q = ell)
    QMat coboundaries;  // columns span the image of the degree q-1 boundary
    QMat reps;          // chosen representative columns
    int dim() const { return reps.cols(); }

    /// Coordinates of cocycle columns in the representative basis modulo
    /// coboundaries.  Throws std::domain_error when a column lies outside
    /// the span of representatives and coboundaries.
    QMat project(const QMat& cols) const;
};

CohomologyPresentation os_cohomology(const OSReducer& red, const std::vector<Q>& lambda, int q);

/// Matrix of the specialized endomorphism on the degree-q cohomology
/// presentation.  Throws std::domain_error when the endomorphism fails to
/// preserve cocycles or coboundaries at these weights.
QMat induced_connection(const OSReducer& red, const GradedMap& omega, const std::vector<Q>& lambda,
                        int q);

/// Top-degree basis tuples K with entries in {2,...,n}, lexicographic.
std::vector<Tuple> beta_nbc_tuples(int n, int ell);

/// Projection of the top exterior power onto top cohomology of the general
/// position arrangement, written in the basis of monomials
/// eta_K = (prod of the weights of K) a_K over the tuples of
/// beta_nbc_tuples.  Rows index the eta basis, columns the full monomial
/// basis.  Throws std::invalid_argument on weights violating
/// g_nonresonant.
QMat gp_projection(int n, int ell, const std::vector<Q>& lambda);

/// The unique matrix X with X P = P M; P must have full row rank
/// (std::invalid_argument) and the system must be exactly consistent
/// (std::domain_error when M does not descend through P).
QMat solve_conjugate(const QMat& p, const QMat& m);

/// Matrix of the endomorphism attached to the index set J on the projected
/// top cohomology of the general position arrangement at the given weights.
QMat aomoto_kita(int n, int ell, const Tuple& J, const std::vector<Q>& lambda);

}  // namespace gmconn
