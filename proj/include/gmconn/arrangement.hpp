#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmconn/linalg.hpp"
#include "gmconn/tuples.hpp"

namespace gmconn {

/// An arrangement of n affine hyperplanes in dimension ell, stored
/// projectively: row i (1-based, i <= n) holds the coefficients
/// (b_{i0}, b_{i1}, ..., b_{i ell}) of H_i = {b_{i0} + b_{i1}x_1 + ... = 0},
/// and row n+1 is the hyperplane at infinity (1, 0, ..., 0).  Index n+1 is
/// the largest element in the index order.
struct Arrangement {
    int n = 0;
    int ell = 0;
    QMat coeffs;  // (n+1) x (ell+1), infinity row included as row n+1

    /// Coefficient row of hyperplane i (1-based, i <= n+1).
    std::vector<Q> row(int i) const;

    /// Submatrix N_S with the rows indexed by S (sorted, 1-based).
    QMat rows_of(const Tuple& S) const;
};

/// Build an arrangement from the n finite coefficient rows; appends the
/// infinity row and validates.  Throws std::invalid_argument when a row is
/// zero in coordinates 1..ell (the hyperplane would be empty or everything),
/// when row lengths disagree with ell+1, or when no ell of the finite rows
/// are linearly independent (the arrangement is not essential).
Arrangement make_arrangement(int ell, const std::vector<std::vector<Q>>& finite_rows);

/// Determinant of the (ell+1)x(ell+1) minor on the rows indexed by I.
/// Throws std::invalid_argument unless I is strictly increasing with
/// |I| = ell+1 and entries in 1..n+1.
Q minor_det(const Arrangement& a, const Tuple& I);

/// rank N_S for a sorted index set S with entries in 1..n+1.
int rank_of(const Arrangement& a, const Tuple& S);

/// Multiplicity m_S = |S| - rank N_S.  Throws std::invalid_argument for an
/// empty S or out-of-range entries.
int multiplicity(const Arrangement& a, const Tuple& S);

/// The combinatorial type of an arrangement: the graded collection of
/// dependent index sets Dep_q for 2 <= q <= ell+1, with multiplicities when
/// the type came from a realization.
struct CombinatorialType {
    int n = 0;
    int ell = 0;
    /// q -> lexicographically sorted dependent q-subsets of {1,...,n+1}.
    std::map<int, std::vector<Tuple>> dep;
    /// m_S for every S in dep.  Fabricated types default every entry to 1.
    std::map<Tuple, int> mult;
    /// Whether mult came from an actual coefficient matrix.
    bool realized = false;

    /// Membership test for a sorted S with 2 <= |S| <= ell+1; any other size
    /// returns false (dependence is only tracked in that range).
    bool is_dependent(const Tuple& S) const;

    /// Inclusion-minimal dependent sets, sorted by (size, lex).
    std::vector<Tuple> circuits() const;

    bool operator==(const CombinatorialType& o) const {
        return n == o.n && ell == o.ell && dep == o.dep;
    }
    bool operator!=(const CombinatorialType& o) const { return !(*this == o); }
};

/// Dep_q(T) for q = 2..ell+1 computed from the coefficient rows, with
/// multiplicities.
CombinatorialType dep_sets(const Arrangement& a);

/// The type with no dependencies in the tracked range (general position).
CombinatorialType general_position_type(int n, int ell);

/// Assemble a type from an explicit list of dependent sets (no realization;
/// multiplicities default to 1).  Closes the list upward: any q-set in the
/// tracked range containing a listed dependent set is dependent too.  Used
/// to build counterexamples in tests.
CombinatorialType fabricated_type(int n, int ell, const std::vector<Tuple>& dependent_sets);

/// True when tprime degenerates t, i.e. Dep(t) is contained in Dep(tprime)
/// degree by degree (t >= tprime in the dominance order).
bool is_degeneration(const CombinatorialType& tprime, const CombinatorialType& t);

/// Dep(tprime, t) = Dep(tprime) - Dep(t), graded.  Throws
/// std::invalid_argument("not a degeneration") when Dep(t) is not contained
/// in Dep(tprime) or the (n, ell) disagree.
std::map<int, std::vector<Tuple>> relative_dep(const CombinatorialType& tprime,
                                               const CombinatorialType& t);

/// Classification of the members of a relative dependence set around one
/// circuit T of the base type.  Writing T = (t_1 < ... < t_{q+1}), the sets
/// that interact with T are its facets T_p = T - {t_p} and the one-element
/// extensions T_p^m = T_p + {m} with m outside T.  A family with fixed p
/// ("type II", the hyperplanes through the point of T_p) consists of all
/// T_p^m together with the facet; a family with fixed m ("type III", H_m
/// joining the circuit) consists of all T_p^m with p varying.  Everything
/// else is unrelated to T ("type I").
struct CircuitFamilies {
    Tuple circuit;

    /// 1-based positions p with facet T_p in rel (several = inconsistent).
    std::vector<int> facets_in_rel;

    struct FamilyII {
        int p = 0;                   // facet position
        std::vector<Tuple> in_rel;   // members T_p^m found in rel
        std::vector<Tuple> missing;  // members in neither rel nor Dep(t)
        bool complete() const { return missing.empty(); }
    };
    struct FamilyIII {
        int m = 0;                   // joining hyperplane index
        std::vector<Tuple> in_rel;   // members T_p^m found in rel
        std::vector<Tuple> missing;  // members not dependent in tprime at all
        bool complete() const { return missing.empty(); }
    };
    /// One entry per facet position present in rel.
    std::vector<FamilyII> type_ii;
    /// One entry per m whose family has at least one member in rel.
    std::vector<FamilyIII> type_iii;

    /// Sets lying in an instantiated type II family and a complete type III
    /// family simultaneously (these must carry multiplicity 2).
    std::vector<Tuple> intersections;

    /// Members of rel relevant to T (facet or T_p^m shaped) that no complete
    /// family accounts for.
    std::vector<Tuple> unexplained;
};

/// Classify the members of rel around the given circuit of t.  `rel` is a
/// graded set as returned by relative_dep.  When `strict` is set, throws
/// std::invalid_argument("not a covering degeneration of this circuit: ...")
/// if any relevant member remains unexplained.
CircuitFamilies classify_relevant(const CombinatorialType& t, const Tuple& circuit,
                                  const std::map<int, std::vector<Tuple>>& rel,
                                  bool strict = false);

/// One named check inside a covering report.
struct CoverCondition {
    std::string id;
    bool pass = true;
    std::string details;
};

struct CoverReport {
    std::vector<CoverCondition> conditions;
    bool all_pass() const {
        for (const auto& c : conditions)
            if (!c.pass) return false;
        return true;
    }
    const CoverCondition* find(const std::string& id) const {
        for (const auto& c : conditions)
            if (c.id == id) return &c;
        return nullptr;
    }
};

/// Check the necessary conditions for tprime to sit directly below t in the
/// dominance order (a covering degeneration).  The conditions are necessary
/// but not sufficient: a pair can pass and still fail to be a cover.
///
///  - "proper":            Dep strictly increases from t to tprime.
///  - "closure":           if two facets of a set W are dependent in tprime
///                         and the common sub-facet is independent, every
///                         facet of W is dependent in tprime.
///  - "facet_uniqueness":  at most one facet of each circuit of t enters rel.
///  - "type_pattern":      every rel member interacting with a circuit of t
///                         belongs to a complete type II or type III family.
///  - "multiplicity":      (only when arrprime is given) relevant sets carry
///                         m_S = 1, except type II/III intersections which
///                         carry m_S = 2.
///  - "realization":       (only when arrprime is given) dep_sets(arrprime)
///                         agrees with tprime.
CoverReport check_cover_necessary(const CombinatorialType& tprime, const CombinatorialType& t,
                                  const Arrangement* arrprime = nullptr);

/// Indices j with row_j in the row span of N_C: the hyperplanes through the
/// flat of C.  Used to enumerate dense edges for nonresonance conditions.
Tuple flat_closure(const Arrangement& a, const Tuple& C);

}  // namespace gmconn
