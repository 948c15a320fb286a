#include "gmconn/os_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gmconn {

int NbcBasis::index(int q, const Tuple& t) const {
    auto it = tuples.find(q);
    if (it == tuples.end()) return -1;
    auto pos = std::lower_bound(it->second.begin(), it->second.end(), t);
    if (pos == it->second.end() || *pos != t) return -1;
    return static_cast<int>(pos - it->second.begin());
}

bool is_nbc(const CombinatorialType& t, const Tuple& T) {
    const int q = static_cast<int>(T.size());
    if (q > t.ell) return false;
    for (int v : T)
        if (v < 1 || v > t.n) throw std::invalid_argument("nbc tuples live in {1,...,n}");
    for (size_t k = 1; k < T.size(); ++k)
        if (T[k] <= T[k - 1]) return false;  // not strictly increasing
    Tuple with_inf = T;
    with_inf.push_back(t.n + 1);
    if (t.is_dependent(with_inf)) return false;
    for (const Tuple& C : t.circuits()) {
        if (C.back() == t.n + 1) continue;  // covered by the independence test
        const Tuple broken(C.begin() + 1, C.end());
        if (is_subset(broken, T)) return false;
    }
    return true;
}

NbcBasis nbc_basis(const CombinatorialType& t) {
    NbcBasis b;
    b.n = t.n;
    b.ell = t.ell;
    for (int q = 0; q <= t.ell; ++q) {
        auto& bucket = b.tuples[q];
        for (const Tuple& T : subsets_lex(t.n, q))
            if (is_nbc(t, T)) bucket.push_back(T);
    }
    return b;
}

std::vector<std::pair<Tuple, OSElement>> ideal_generators(const CombinatorialType& t) {
    std::vector<std::pair<Tuple, OSElement>> gens;
    for (const Tuple& C : t.circuits()) {
        if (C.back() == t.n + 1) {
            const Tuple U(C.begin(), C.end() - 1);
            gens.emplace_back(C, OSElement::generator(U));
        } else {
            gens.emplace_back(C, boundary_del(OSElement::generator(C)));
        }
    }
    return gens;
}

PolyMat coordinates(const OSElement& x, int q, const std::vector<Tuple>& monomials) {
    if (!x.is_zero() && x.degree() != q)
        throw std::invalid_argument("element degree disagrees with the requested degree");
    const TupleIndex idx(monomials);
    PolyMat col(static_cast<int>(monomials.size()), 1);
    for (const auto& [tuple, coeff] : x.terms()) {
        const int i = idx(tuple);
        if (i < 0)
            throw std::invalid_argument("element mentions a monomial outside the basis: " + tuple_label(tuple));
        col(i, 0) = coeff;
    }
    return col;
}

OSReducer::OSReducer(const CombinatorialType& t) : type_(t), basis_(nbc_basis(t)) {
    const auto gens = ideal_generators(t);
    for (int q = 0; q <= t.ell; ++q) {
        monomials_[q] = subsets_lex(t.n, q);
        const auto& mono = monomials_[q];
        const int full = static_cast<int>(mono.size());
        const TupleIndex idx(mono);

        // Rational spanning columns of the degree-q ideal piece.
        std::vector<std::vector<Q>> span_cols;
        for (const auto& [circuit, r] : gens) {
            const int d = r.degree();
            if (d > q) continue;
            for (const Tuple& K : subsets_lex(t.n, q - d)) {
                const OSElement g = wedge(OSElement::generator(K), r);
                if (g.is_zero()) continue;
                std::vector<Q> col(full, Q(0));
                for (const auto& [tuple, coeff] : g.terms()) {
                    if (!coeff.terms().empty() && coeff.degree() != 0)
                        throw std::logic_error("relation with non-constant coefficients");
                    col[idx(tuple)] = coeff.terms().empty() ? Q(0) : coeff.terms().begin()->second;
                }
                span_cols.push_back(std::move(col));
            }
        }

        const auto& nbc = basis_.tuples[q];
        const int nb = static_cast<int>(nbc.size());
        const int ng = static_cast<int>(span_cols.size());
        QMat ge(full, ng + nb);
        for (int j = 0; j < ng; ++j)
            for (int i = 0; i < full; ++i) ge(i, j) = span_cols[j][i];
        for (int j = 0; j < nb; ++j) ge(idx(nbc[j]), ng + j) = 1;

        QMat gonly(full, ng);
        for (int j = 0; j < ng; ++j)
            for (int i = 0; i < full; ++i) gonly(i, j) = span_cols[j][i];

        if (rank(gonly) + nb != full || rank(ge) != full) {
            std::ostringstream os;
            os << "nbc monomials do not complement the relation ideal in degree " << q;
            throw std::logic_error(os.str());
        }

        const auto sol = solve(ge, QMat::identity(full));
        if (!sol) throw std::logic_error("reduction system unexpectedly inconsistent");
        QMat p(nb, full);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < full; ++j) p(i, j) = (*sol)(ng + i, j);
        reduction_[q] = std::move(p);
    }
}

const std::vector<Tuple>& OSReducer::monomials(int q) const {
    auto it = monomials_.find(q);
    if (it == monomials_.end()) throw std::out_of_range("degree outside 0..ell");
    return it->second;
}

const QMat& OSReducer::reduction_matrix(int q) const {
    auto it = reduction_.find(q);
    if (it == reduction_.end()) throw std::out_of_range("degree outside 0..ell");
    return it->second;
}

QMat OSReducer::inclusion_matrix(int q) const {
    const auto& mono = monomials(q);
    const TupleIndex idx(mono);
    const auto& nbc = basis_.tuples.at(q);
    QMat e(static_cast<int>(mono.size()), static_cast<int>(nbc.size()));
    for (int j = 0; j < static_cast<int>(nbc.size()); ++j) e(idx(nbc[j]), j) = 1;
    return e;
}

std::vector<PolyQ> OSReducer::reduce(const OSElement& x, int q) const {
    const auto& mono = monomials(q);
    const TupleIndex idx(mono);
    const QMat& p = reduction_matrix(q);
    std::vector<PolyQ> out(p.rows());
    if (!x.is_zero() && x.degree() != q)
        throw std::invalid_argument("element degree disagrees with the requested degree");
    for (const auto& [tuple, coeff] : x.terms()) {
        const int j = idx(tuple);
        if (j < 0)
            throw std::invalid_argument("element mentions a monomial outside the algebra: " + tuple_label(tuple));
        for (int i = 0; i < p.rows(); ++i)
            if (p(i, j) != 0) out[i] += PolyQ(p(i, j)) * coeff;
    }
    return out;
}

std::vector<OSElement> OSReducer::ideal_span(int q) const {
    std::vector<OSElement> out;
    for (const auto& [circuit, r] : ideal_generators(type_)) {
        const int d = r.degree();
        if (d > q) continue;
        for (const Tuple& K : subsets_lex(type_.n, q - d)) {
            const OSElement g = wedge(OSElement::generator(K), r);
            if (!g.is_zero()) out.push_back(g);
        }
    }
    return out;
}

std::vector<int> OSReducer::betti() const {
    std::vector<int> b;
    for (int q = 0; q <= type_.ell; ++q) b.push_back(basis_.dim(q));
    return b;
}

}  // namespace gmconn
