#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gmconn/arrangement.hpp"
#include "gmconn/os_element.hpp"

namespace gmconn {

/// The nbc monomial basis of the Orlik-Solomon algebra of a type, graded by
/// degree 0..ell, each degree in lexicographic order.
struct NbcBasis {
    int n = 0;
    int ell = 0;
    std::map<int, std::vector<Tuple>> tuples;

    int dim(int q) const {
        auto it = tuples.find(q);
        return it == tuples.end() ? 0 : static_cast<int>(it->second.size());
    }
    /// Position of t in degree q, or -1.
    int index(int q, const Tuple& t) const;
};

/// A q-tuple T in {1,...,n} is nbc when T + {n+1} is independent and T
/// contains no broken circuit C - {min C} of a circuit C avoiding n+1.
bool is_nbc(const CombinatorialType& t, const Tuple& T);

NbcBasis nbc_basis(const CombinatorialType& t);

/// Defining relations of the broken-circuit presentation: for a circuit C
/// avoiding n+1 the relation is the boundary of a_C; for a circuit U + {n+1}
/// it is a_U itself (the hyperplanes of U have empty common intersection).
std::vector<std::pair<Tuple, OSElement>> ideal_generators(const CombinatorialType& t);

/// Reduction of the free exterior algebra on a_1..a_n onto the nbc basis
/// modulo the relation ideal, one exact matrix per degree.  Construction
/// checks that the nbc monomials complement the ideal in every degree and
/// throws std::logic_error otherwise (the reduction would not be
/// well-defined).
class OSReducer {
public:
    explicit OSReducer(const CombinatorialType& t);

    const CombinatorialType& type() const { return type_; }
    const NbcBasis& basis() const { return basis_; }

    /// Full monomial basis of degree q (all q-subsets of {1,...,n}, lex).
    const std::vector<Tuple>& monomials(int q) const;

    /// dim(q) x C(n,q) matrix taking full-basis coordinates to nbc-basis
    /// coordinates of the class modulo the ideal.
    const QMat& reduction_matrix(int q) const;

    /// 0/1 inclusion matrix C(n,q) x dim(q) embedding nbc monomials into the
    /// full basis.
    QMat inclusion_matrix(int q) const;

    /// Coordinates of x modulo the ideal in the degree-q nbc basis.  The
    /// degree is passed explicitly so the zero element reduces too.
    std::vector<PolyQ> reduce(const OSElement& x, int q) const;

    /// Spanning set of the degree-q piece of the relation ideal, as
    /// elements a_K ^ r_C.
    std::vector<OSElement> ideal_span(int q) const;

    /// Betti numbers b_0..b_ell (nbc counts per degree).
    std::vector<int> betti() const;

private:
    CombinatorialType type_;
    NbcBasis basis_;
    std::map<int, std::vector<Tuple>> monomials_;
    std::map<int, QMat> reduction_;
};

/// Full-basis coordinate column of a (possibly polynomial-coefficient)
/// element of degree q; throws when a term uses an index above n.
PolyMat coordinates(const OSElement& x, int q, const std::vector<Tuple>& monomials);

}  // namespace gmconn
