#pragma once

#include <map>
#include <string>
#include <vector>

#include "gmconn/os_algebra.hpp"
#include "gmconn/poly.hpp"

namespace gmconn {

/// A degree-indexed family of matrices with polynomial entries in the formal
/// weights y_1..y_n.  Columns index the source basis in degree q, rows the
/// target basis in degree q + shift.
struct GradedMap {
    int n = 0;
    int ell = 0;
    int shift = 0;
    std::map<int, PolyMat> mats;

    bool has(int q) const { return mats.count(q) != 0; }
    const PolyMat& at(int q) const {
        auto it = mats.find(q);
        if (it == mats.end()) throw std::out_of_range("graded map has no matrix in this degree");
        return it->second;
    }
};

/// Same shape with rational entries, after substituting weights.
struct QGradedMap {
    int n = 0;
    int ell = 0;
    int shift = 0;
    std::map<int, QMat> mats;

    bool has(int q) const { return mats.count(q) != 0; }
    const QMat& at(int q) const {
        auto it = mats.find(q);
        if (it == mats.end()) throw std::out_of_range("graded map has no matrix in this degree");
        return it->second;
    }
};

QGradedMap specialize(const GradedMap& m, const std::vector<Q>& lambda);

/// Left multiplication by a_y = y_1 a_1 + ... + y_n a_n in the nbc bases of
/// the reducer's type: degrees 0..ell-1, shift +1.
GradedMap aomoto_boundary(const OSReducer& red);

/// Value of the formal endomorphism attached to the index set S on the
/// generator a_T of the free exterior algebra (S may contain n+1, T may
/// not).  Zero unless |T| is |S|-1 or |S|, per the defining case analysis.
OSElement tilde_omega_apply(int n, const Tuple& S, const Tuple& T);

/// Matrices of the formal endomorphism attached to S on the full monomial
/// basis in degrees 0..ell (shift 0).
GradedMap tilde_omega_S(int n, int ell, const Tuple& S);

/// Relative dependence sets of a degeneration together with their
/// multiplicities in the degenerate type.
std::map<Tuple, int> weighted_relative_dep(const CombinatorialType& tprime,
                                           const CombinatorialType& t);

/// Sum of m_S * tilde_omega_S over the given sets (only |S| <= ell+1
/// contribute), on the full monomial basis.
GradedMap tilde_omega_pair(int n, int ell, const std::map<Tuple, int>& weighted_sets);

struct InvarianceReport {
    bool pass = true;
    std::vector<std::string> violations;
};

/// Check that the graded endomorphism maps the relation ideal of the
/// reducer's type into itself: the reduction of the image of every spanning
/// element a_K ^ r_C must vanish in every degree.
InvarianceReport verify_ideal_invariance(const OSReducer& red, const GradedMap& tilde);

/// The endomorphism induced on the nbc presentation: reduction * tilde *
/// inclusion per degree.  Throws std::domain_error when
/// verify_ideal_invariance fails (the induced map would be ill-defined).
GradedMap induced_omega(const OSReducer& red, const GradedMap& tilde);

/// Convenience: the induced endomorphism of a degeneration pair on the nbc
/// presentation of the base type t.
GradedMap omega_pair(const CombinatorialType& tprime, const CombinatorialType& t);

struct CochainReport {
    bool pass = true;
    std::vector<std::string> failures;
};

/// Check boundary . map == map . boundary in every degree where both sides
/// exist (map has shift 0, boundary shift +1).
CochainReport verify_cochain(const GradedMap& map, const GradedMap& boundary);

}  // namespace gmconn
