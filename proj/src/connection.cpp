#include "gmconn/connection.hpp"

#include <sstream>
#include <stdexcept>

namespace gmconn {

namespace {

std::string weight_sum_label(const Tuple& S) {
    std::string s = "weight sum over {";
    for (size_t i = 0; i < S.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(S[i]);
    }
    s += '}';
    return s;
}

void check_not_nonneg_int(const Q& value, const std::string& label, ResonanceReport& report) {
    if (is_nonnegative_integer(value)) {
        report.ok = false;
        report.violations.push_back(label + " = " + rat_to_string(value) + " is a nonnegative integer");
    }
}

}  // namespace

ResonanceReport g_nonresonant(const std::vector<Q>& lambda) {
    ResonanceReport report;
    Q total(0);
    for (size_t j = 0; j < lambda.size(); ++j) {
        check_not_nonneg_int(lambda[j], "weight " + std::to_string(j + 1), report);
        total += lambda[j];
    }
    check_not_nonneg_int(-total, "negated total weight", report);
    return report;
}

ResonanceReport t_nonresonant(const Arrangement& a, const std::vector<Q>& lambda) {
    if (static_cast<int>(lambda.size()) != a.n)
        throw std::invalid_argument("weight vector length must equal the number of finite hyperplanes");
    ResonanceReport report;
    Q total(0);
    for (int j = 1; j <= a.n; ++j) {
        check_not_nonneg_int(lambda[j - 1], "weight " + std::to_string(j), report);
        total += lambda[j - 1];
    }
    const auto type = dep_sets(a);
    for (const Tuple& C : type.circuits()) {
        if (C.back() == a.n + 1) continue;  // flats inside the infinity hyperplane carry no weight sum
        const Tuple flat = flat_closure(a, C);
        Q sum(0);
        for (int j : flat) sum += lambda[j - 1];
        check_not_nonneg_int(sum, weight_sum_label(flat), report);
    }
    check_not_nonneg_int(-total, "negated total weight", report);
    return report;
}

QMat CohomologyPresentation::project(const QMat& cols) const {
    const QMat system = reps.hcat(coboundaries);
    const auto sol = solve(system, cols);
    if (!sol)
        throw std::domain_error("column is not a combination of representatives and coboundaries");
    QMat out(reps.cols(), cols.cols());
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out(i, j) = (*sol)(i, j);
    return out;
}

CohomologyPresentation os_cohomology(const OSReducer& red, const std::vector<Q>& lambda, int q) {
    const auto& t = red.type();
    if (q < 0 || q > t.ell) throw std::out_of_range("degree outside 0..ell");
    const QGradedMap mu = specialize(aomoto_boundary(red), lambda);

    CohomologyPresentation pres;
    pres.q = q;
    const int dim = red.basis().dim(q);
    pres.cocycles = (q == t.ell) ? QMat::identity(dim) : nullspace(mu.at(q));
    if (q == 0) {
        pres.coboundaries = QMat(dim, 0);
    } else {
        const QMat& b = mu.at(q - 1);
        QMat echelon = b;
        const auto pivots = rref_inplace(echelon);
        pres.coboundaries = b.select_columns(pivots);
    }

    // Coboundaries are cocycles; a failure here would mean the complex does
    // not square to zero.
    if (q < t.ell && !(mu.at(q) * pres.coboundaries).is_zero())
        throw std::logic_error("boundary image is not annihilated by the next boundary");

    // Earliest cocycle columns independent modulo the coboundaries.
    QMat accum = pres.coboundaries;
    std::vector<int> chosen;
    int base_rank = rank(accum);
    for (int j = 0; j < pres.cocycles.cols(); ++j) {
        QMat candidate = accum.hcat(pres.cocycles.select_columns({j}));
        const int r = rank(candidate);
        if (r > base_rank) {
            chosen.push_back(j);
            accum = std::move(candidate);
            base_rank = r;
        }
    }
    pres.reps = pres.cocycles.select_columns(chosen);
    return pres;
}

QMat induced_connection(const OSReducer& red, const GradedMap& omega, const std::vector<Q>& lambda,
                        int q) {
    const auto& t = red.type();
    const QMat w = omega.at(q).evaluate(lambda);
    const CohomologyPresentation pres = os_cohomology(red, lambda, q);
    const QGradedMap mu = specialize(aomoto_boundary(red), lambda);

    if (q < t.ell && !(mu.at(q) * (w * pres.cocycles)).is_zero())
        throw std::domain_error("endomorphism does not preserve cocycles at these weights");
    if (pres.coboundaries.cols() > 0 && !solve(pres.coboundaries, w * pres.coboundaries))
        throw std::domain_error("endomorphism does not preserve coboundaries at these weights");

    return pres.project(w * pres.reps);
}

std::vector<Tuple> beta_nbc_tuples(int n, int ell) {
    std::vector<Tuple> out;
    for (Tuple t : subsets_lex(n - 1, ell)) {
        for (int& v : t) ++v;  // shift {1..n-1} to {2..n}
        out.push_back(std::move(t));
    }
    return out;
}

QMat gp_projection(int n, int ell, const std::vector<Q>& lambda) {
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("weight vector length must equal the number of finite hyperplanes");
    const auto report = g_nonresonant(lambda);
    if (!report.ok)
        throw std::invalid_argument("weights are resonant for the general position arrangement: " +
                                    report.violations.front());

    const auto eta = beta_nbc_tuples(n, ell);
    const TupleIndex eta_idx(eta);
    const auto mono = subsets_lex(n, ell);

    QMat p(static_cast<int>(eta.size()), static_cast<int>(mono.size()));
    for (int j = 0; j < static_cast<int>(mono.size()); ++j) {
        const Tuple& K = mono[j];
        Q denom(1);
        for (int k : K) denom *= lambda[k - 1];
        // Nonresonance keeps every weight away from zero.
        if (K[0] != 1) {
            p(eta_idx(K), j) = Q(1) / denom;
            continue;
        }
        const Tuple kprime(K.begin() + 1, K.end());
        for (int i = 1; i <= n; ++i) {
            if (contains(K, i)) continue;
            Tuple joined = kprime;
            joined.push_back(i);
            const int sign = sort_with_sign(joined);
            // joined is (i, K') reordered; the display convention prepends i,
            // so the sign also accounts for moving i to the front.
            const int front_sign = (kprime.size() % 2 == 0) ? 1 : -1;
            p(eta_idx(joined), j) += Q(-sign * front_sign) / denom;
        }
    }
    return p;
}

QMat solve_conjugate(const QMat& p, const QMat& m) {
    if (p.cols() != m.rows() || m.rows() != m.cols())
        throw std::invalid_argument("shape mismatch: need P (h x d) and M (d x d)");
    if (rank(p) < p.rows()) throw std::invalid_argument("projection must have full row rank");
    const QMat pt = p.transposed();
    const auto sol = solve(pt, m.transposed() * pt);
    if (!sol) throw std::domain_error("the endomorphism does not descend through the projection");
    return sol->transposed();
}

QMat aomoto_kita(int n, int ell, const Tuple& J, const std::vector<Q>& lambda) {
    const QMat p = gp_projection(n, ell, lambda);
    const GradedMap tilde = tilde_omega_S(n, ell, J);
    const QMat m = tilde.at(ell).evaluate(lambda);
    return solve_conjugate(p, m);
}

}  // namespace gmconn
