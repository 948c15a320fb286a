#include "gmconn/aomoto.hpp"

#include <sstream>
#include <stdexcept>

namespace gmconn {

QGradedMap specialize(const GradedMap& m, const std::vector<Q>& lambda) {
    if (static_cast<int>(lambda.size()) != m.n)
        throw std::invalid_argument("weight vector length must equal the number of finite hyperplanes");
    QGradedMap out;
    out.n = m.n;
    out.ell = m.ell;
    out.shift = m.shift;
    for (const auto& [q, mat] : m.mats) out.mats[q] = mat.evaluate(lambda);
    return out;
}

GradedMap aomoto_boundary(const OSReducer& red) {
    const auto& t = red.type();
    GradedMap out;
    out.n = t.n;
    out.ell = t.ell;
    out.shift = 1;
    const OSElement ay = OSElement::weight_one_form(t.n);
    for (int q = 0; q < t.ell; ++q) {
        const auto& source = red.basis().tuples.at(q);
        PolyMat m(red.basis().dim(q + 1), static_cast<int>(source.size()));
        for (int j = 0; j < static_cast<int>(source.size()); ++j) {
            const auto coords = red.reduce(wedge(ay, OSElement::generator(source[j])), q + 1);
            for (int i = 0; i < m.rows(); ++i) m(i, j) = coords[i];
        }
        out.mats[q] = std::move(m);
    }
    return out;
}

OSElement tilde_omega_apply(int n, const Tuple& S, const Tuple& T) {
    const int q = static_cast<int>(S.size()) - 1;
    const int p = static_cast<int>(T.size());
    const OSElement zero;
    if (p != q && p != q + 1) return zero;

    const bool infty = !S.empty() && S.back() == n + 1;
    const Tuple S0 = infty ? Tuple(S.begin(), S.end() - 1) : S;

    if (!infty) {
        if (p == q) {
            // S = {j} + T: send a_T to y_j * del a_{(j,T)}.
            if (is_subset(T, S)) {
                const Tuple extra = set_difference(S, T);
                if (extra.size() == 1) {
                    const int j = extra[0];
                    const OSElement g = wedge(OSElement::generator(Tuple{j}), OSElement::generator(T));
                    return PolyQ::variable(j) * boundary_del(g);
                }
            }
        } else if (S == T) {
            // S = T: send a_T to a_y ^ del a_T.
            return wedge(OSElement::weight_one_form(n), boundary_del(OSElement::generator(T)));
        }
        return zero;
    }

    if (p == q) {
        if (S0 == T) {
            // Coefficient -(sum of y_j over j outside T) on a_T.
            Tuple outside;
            for (int j = 1; j <= n; ++j)
                if (!contains(T, j)) outside.push_back(j);
            return OSElement::generator(T, -linear_sum(outside));
        }
        const Tuple dropped = set_difference(T, S0);   // the deleted entry t_k
        const Tuple added = set_difference(S0, T);     // the new index j
        if (dropped.size() == 1 && added.size() == 1) {
            const int tk = dropped[0];
            const int j = added[0];
            int k = 0;
            for (int i = 0; i < p; ++i)
                if (T[i] == tk) k = i + 1;
            const Q sign = (k % 2 == 1) ? Q(1) : Q(-1);  // (-1)^(k-1)
            const OSElement g =
                wedge(OSElement::generator(Tuple{j}), OSElement::generator(drop_position(T, k)));
            return (PolyQ(sign) * PolyQ::variable(j)) * g;
        }
        return zero;
    }

    // p == q + 1 with n+1 in S: S0 must be T with one entry deleted.
    if (is_subset(S0, T)) {
        const Tuple dropped = set_difference(T, S0);
        if (dropped.size() == 1) {
            const int tk = dropped[0];
            int k = 0;
            for (int i = 0; i < p; ++i)
                if (T[i] == tk) k = i + 1;
            const Q sign = (k % 2 == 0) ? Q(1) : Q(-1);  // (-1)^k
            return PolyQ(sign) *
                   wedge(OSElement::weight_one_form(n), OSElement::generator(drop_position(T, k)));
        }
    }
    return zero;
}

GradedMap tilde_omega_S(int n, int ell, const Tuple& S) {
    for (size_t i = 0; i < S.size(); ++i) {
        if (S[i] < 1 || S[i] > n + 1)
            throw std::invalid_argument("index set entries must lie in 1..n+1");
        if (i && S[i] <= S[i - 1])
            throw std::invalid_argument("index set must be strictly increasing");
    }
    GradedMap out;
    out.n = n;
    out.ell = ell;
    out.shift = 0;
    for (int q = 0; q <= ell; ++q) {
        const auto mono = subsets_lex(n, q);
        const TupleIndex idx(mono);
        PolyMat m(static_cast<int>(mono.size()), static_cast<int>(mono.size()));
        for (int j = 0; j < static_cast<int>(mono.size()); ++j) {
            const OSElement img = tilde_omega_apply(n, S, mono[j]);
            for (const auto& [tuple, coeff] : img.terms()) m(idx(tuple), j) = coeff;
        }
        out.mats[q] = std::move(m);
    }
    return out;
}

std::map<Tuple, int> weighted_relative_dep(const CombinatorialType& tprime,
                                           const CombinatorialType& t) {
    std::map<Tuple, int> out;
    for (const auto& [q, sets] : relative_dep(tprime, t)) {
        (void)q;
        for (const Tuple& S : sets) {
            auto it = tprime.mult.find(S);
            out[S] = it == tprime.mult.end() ? 1 : it->second;
        }
    }
    return out;
}

GradedMap tilde_omega_pair(int n, int ell, const std::map<Tuple, int>& weighted_sets) {
    GradedMap out;
    out.n = n;
    out.ell = ell;
    out.shift = 0;
    for (int q = 0; q <= ell; ++q) {
        const int dim = static_cast<int>(subsets_lex(n, q).size());
        out.mats[q] = PolyMat(dim, dim);
    }
    for (const auto& [S, m] : weighted_sets) {
        if (static_cast<int>(S.size()) > ell + 1) continue;
        const GradedMap one = tilde_omega_S(n, ell, S);
        for (int q = 0; q <= ell; ++q) out.mats[q] = out.mats[q] + PolyQ(Q(m)) * one.at(q);
    }
    return out;
}

InvarianceReport verify_ideal_invariance(const OSReducer& red, const GradedMap& tilde) {
    InvarianceReport report;
    const auto& t = red.type();
    for (int q = 0; q <= t.ell; ++q) {
        const auto span = red.ideal_span(q);
        const auto& mono = red.monomials(q);
        const PolyMat reduction = to_poly(red.reduction_matrix(q));
        for (const OSElement& g : span) {
            const PolyMat image = tilde.at(q) * coordinates(g, q, mono);
            const PolyMat residue = reduction * image;
            if (!residue.is_zero()) {
                std::ostringstream os;
                os << "degree " << q << ": image of " << g.to_string()
                   << " does not reduce to zero modulo the ideal";
                report.violations.push_back(os.str());
                report.pass = false;
            }
        }
    }
    return report;
}

GradedMap induced_omega(const OSReducer& red, const GradedMap& tilde) {
    const auto report = verify_ideal_invariance(red, tilde);
    if (!report.pass)
        throw std::domain_error("endomorphism does not preserve the relation ideal: " +
                                report.violations.front());
    const auto& t = red.type();
    GradedMap out;
    out.n = t.n;
    out.ell = t.ell;
    out.shift = 0;
    for (int q = 0; q <= t.ell; ++q) {
        const PolyMat p = to_poly(red.reduction_matrix(q));
        const PolyMat e = to_poly(red.inclusion_matrix(q));
        out.mats[q] = p * tilde.at(q) * e;
    }
    return out;
}

GradedMap omega_pair(const CombinatorialType& tprime, const CombinatorialType& t) {
    const OSReducer red(t);
    const auto weighted = weighted_relative_dep(tprime, t);
    const GradedMap tilde = tilde_omega_pair(t.n, t.ell, weighted);
    return induced_omega(red, tilde);
}

CochainReport verify_cochain(const GradedMap& map, const GradedMap& boundary) {
    CochainReport report;
    if (map.shift != 0 || boundary.shift != 1)
        throw std::invalid_argument("verify_cochain expects an endomorphism and a degree +1 boundary");
    for (const auto& [q, b] : boundary.mats) {
        if (!map.has(q) || !map.has(q + 1)) continue;
        const PolyMat lhs = b * map.at(q);
        const PolyMat rhs = map.at(q + 1) * b;
        if (lhs == rhs) continue;
        report.pass = false;
        for (int i = 0; i < lhs.rows() && report.failures.size() < 8; ++i)
            for (int j = 0; j < lhs.cols(); ++j)
                if (!(lhs(i, j) == rhs(i, j))) {
                    std::ostringstream os;
                    os << "degree " << q << ", entry (" << i << "," << j << "): " << lhs(i, j).to_string()
                       << " vs " << rhs(i, j).to_string();
                    report.failures.push_back(os.str());
                    i = lhs.rows();  // report the first few entries only
                    break;
                }
    }
    return report;
}

}  // namespace gmconn
