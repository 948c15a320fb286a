#include "gmconn/arrangement.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gmconn {

namespace {

std::string tuple_list(const std::vector<Tuple>& ts) {
    std::string s;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (i) s += ", ";
        s += tuple_label(ts[i]);
    }
    return s;
}

void require_index_set(const Tuple& S, int max_index, const char* what) {
    for (size_t i = 0; i < S.size(); ++i) {
        if (S[i] < 1 || S[i] > max_index)
            throw std::invalid_argument(std::string(what) + ": index out of range in " + tuple_label(S));
        if (i && S[i] <= S[i - 1])
            throw std::invalid_argument(std::string(what) + ": indices must be strictly increasing in " +
                                        tuple_label(S));
    }
}

}  // namespace

std::vector<Q> Arrangement::row(int i) const {
    if (i < 1 || i > n + 1) throw std::invalid_argument("hyperplane index out of range");
    std::vector<Q> r(ell + 1);
    for (int j = 0; j <= ell; ++j) r[j] = coeffs(i - 1, j);
    return r;
}

QMat Arrangement::rows_of(const Tuple& S) const {
    require_index_set(S, n + 1, "rows_of");
    QMat m(static_cast<int>(S.size()), ell + 1);
    for (int i = 0; i < static_cast<int>(S.size()); ++i)
        for (int j = 0; j <= ell; ++j) m(i, j) = coeffs(S[i] - 1, j);
    return m;
}

Arrangement make_arrangement(int ell, const std::vector<std::vector<Q>>& finite_rows) {
    if (ell < 1) throw std::invalid_argument("dimension must be at least 1");
    const int n = static_cast<int>(finite_rows.size());
    if (n < 1) throw std::invalid_argument("arrangement needs at least one finite hyperplane");

    Arrangement a;
    a.n = n;
    a.ell = ell;
    a.coeffs = QMat(n + 1, ell + 1);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(finite_rows[i].size()) != ell + 1) {
            std::ostringstream os;
            os << "row " << (i + 1) << " has " << finite_rows[i].size() << " entries, expected " << (ell + 1);
            throw std::invalid_argument(os.str());
        }
        bool linear_part_zero = true;
        for (int j = 0; j <= ell; ++j) {
            a.coeffs(i, j) = finite_rows[i][j];
            if (j >= 1 && finite_rows[i][j] != 0) linear_part_zero = false;
        }
        if (linear_part_zero) {
            std::ostringstream os;
            os << "row " << (i + 1) << " has zero linear part and does not define an affine hyperplane";
            throw std::invalid_argument(os.str());
        }
    }
    a.coeffs(n, 0) = 1;  // hyperplane at infinity

    // Essential: the linear parts of some ell finite rows must be independent.
    QMat finite(n, ell);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= ell; ++j) finite(i, j - 1) = a.coeffs(i, j);
    if (rank(finite) < ell)
        throw std::invalid_argument("arrangement is not essential: fewer than ell independent hyperplanes");
    return a;
}

Q minor_det(const Arrangement& a, const Tuple& I) {
    require_index_set(I, a.n + 1, "minor_det");
    if (static_cast<int>(I.size()) != a.ell + 1)
        throw std::invalid_argument("minor_det: index set must have exactly ell+1 entries");
    return det_by_cofactors(a.rows_of(I));
}

int rank_of(const Arrangement& a, const Tuple& S) {
    if (S.empty()) return 0;
    return rank(a.rows_of(S));
}

int multiplicity(const Arrangement& a, const Tuple& S) {
    if (S.empty()) throw std::invalid_argument("multiplicity of the empty index set is undefined");
    require_index_set(S, a.n + 1, "multiplicity");
    return static_cast<int>(S.size()) - rank_of(a, S);
}

bool CombinatorialType::is_dependent(const Tuple& S) const {
    const int q = static_cast<int>(S.size());
    if (q < 2 || q > ell + 1) return false;
    auto it = dep.find(q);
    if (it == dep.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), S);
}

std::vector<Tuple> CombinatorialType::circuits() const {
    std::vector<Tuple> out;
    for (const auto& [q, sets] : dep) {
        for (const Tuple& S : sets) {
            // Dependence is closed upward, so minimality only needs the facets.
            bool minimal = true;
            for (int k = 1; k <= q && minimal; ++k)
                if (is_dependent(drop_position(S, k))) minimal = false;
            if (minimal) out.push_back(S);
        }
    }
    std::sort(out.begin(), out.end(), [](const Tuple& a, const Tuple& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

CombinatorialType dep_sets(const Arrangement& a) {
    CombinatorialType t;
    t.n = a.n;
    t.ell = a.ell;
    t.realized = true;
    for (int q = 2; q <= a.ell + 1; ++q) {
        auto& bucket = t.dep[q];
        for (const Tuple& S : subsets_lex(a.n + 1, q)) {
            const int r = rank_of(a, S);
            if (r < q) {
                bucket.push_back(S);
                t.mult[S] = q - r;
            }
        }
    }
    return t;
}

CombinatorialType general_position_type(int n, int ell) {
    CombinatorialType t;
    t.n = n;
    t.ell = ell;
    for (int q = 2; q <= ell + 1; ++q) t.dep[q];
    return t;
}

CombinatorialType fabricated_type(int n, int ell, const std::vector<Tuple>& dependent_sets) {
    CombinatorialType t = general_position_type(n, ell);
    for (const Tuple& S : dependent_sets) {
        require_index_set(S, n + 1, "fabricated_type");
        const int q = static_cast<int>(S.size());
        if (q < 2 || q > ell + 1)
            throw std::invalid_argument("fabricated_type: set size outside the tracked range 2..ell+1");
    }
    auto listed = [&dependent_sets](const Tuple& S) {
        return std::find(dependent_sets.begin(), dependent_sets.end(), S) != dependent_sets.end();
    };
    // Close upward: a set containing a dependent set is dependent.
    for (int q = 2; q <= ell + 1; ++q) {
        auto& bucket = t.dep[q];
        for (const Tuple& S : subsets_lex(n + 1, q)) {
            bool dep = listed(S);
            for (int k = 1; k <= q && !dep; ++k)
                if (t.is_dependent(drop_position(S, k))) dep = true;
            if (dep) {
                bucket.push_back(S);
                t.mult[S] = 1;
            }
        }
    }
    return t;
}

bool is_degeneration(const CombinatorialType& tprime, const CombinatorialType& t) {
    if (tprime.n != t.n || tprime.ell != t.ell) return false;
    for (const auto& [q, sets] : t.dep) {
        auto it = tprime.dep.find(q);
        if (it == tprime.dep.end()) {
            if (!sets.empty()) return false;
            continue;
        }
        if (!std::includes(it->second.begin(), it->second.end(), sets.begin(), sets.end())) return false;
    }
    return true;
}

std::map<int, std::vector<Tuple>> relative_dep(const CombinatorialType& tprime,
                                               const CombinatorialType& t) {
    if (!is_degeneration(tprime, t))
        throw std::invalid_argument("not a degeneration: Dep of the first type must contain Dep of the second");
    std::map<int, std::vector<Tuple>> rel;
    for (const auto& [q, sets] : tprime.dep) {
        auto it = t.dep.find(q);
        auto& bucket = rel[q];
        if (it == t.dep.end()) {
            bucket = sets;
        } else {
            std::set_difference(sets.begin(), sets.end(), it->second.begin(), it->second.end(),
                                std::back_inserter(bucket));
        }
    }
    return rel;
}

namespace {

bool in_graded(const std::map<int, std::vector<Tuple>>& graded, const Tuple& S) {
    auto it = graded.find(static_cast<int>(S.size()));
    if (it == graded.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), S);
}

}  // namespace

CircuitFamilies classify_relevant(const CombinatorialType& t, const Tuple& circuit,
                                  const std::map<int, std::vector<Tuple>>& rel, bool strict) {
    CircuitFamilies out;
    out.circuit = circuit;
    const int q1 = static_cast<int>(circuit.size());
    const int top = t.n + 1;

    // Indices outside the circuit, candidates for the joining hyperplane m.
    Tuple outside;
    for (int m = 1; m <= top; ++m)
        if (!contains(circuit, m)) outside.push_back(m);

    auto extension = [&circuit](int p, int m) {
        Tuple s = drop_position(circuit, p);
        s.push_back(m);
        std::sort(s.begin(), s.end());
        return s;
    };

    for (int p = 1; p <= q1; ++p)
        if (in_graded(rel, drop_position(circuit, p))) out.facets_in_rel.push_back(p);

    // Type II: hyperplanes through the point of a facet that entered rel.
    for (int p : out.facets_in_rel) {
        CircuitFamilies::FamilyII fam;
        fam.p = p;
        for (int m : outside) {
            const Tuple s = extension(p, m);
            if (in_graded(rel, s))
                fam.in_rel.push_back(s);
            else if (!t.is_dependent(s))
                fam.missing.push_back(s);
        }
        out.type_ii.push_back(std::move(fam));
    }

    // Type III: a hyperplane m joining the circuit makes every extension
    // T_p + {m} dependent, with nothing excluded (members already dependent
    // in t count toward completeness but not toward rel).
    std::vector<int> complete_iii;
    for (int m : outside) {
        CircuitFamilies::FamilyIII fam;
        fam.m = m;
        for (int p = 1; p <= q1; ++p) {
            const Tuple s = extension(p, m);
            if (in_graded(rel, s))
                fam.in_rel.push_back(s);
            else if (!t.is_dependent(s))
                fam.missing.push_back(s);
        }
        if (fam.complete()) complete_iii.push_back(m);
        if (!fam.in_rel.empty()) out.type_iii.push_back(std::move(fam));
    }

    // Intersections of an instantiated (complete) type II family with a
    // complete type III family: the single common member T_p + {m}.
    for (const auto& fam : out.type_ii) {
        if (!fam.complete()) continue;
        for (int m : complete_iii) out.intersections.push_back(extension(fam.p, m));
    }
    std::sort(out.intersections.begin(), out.intersections.end());

    // Relevant members of rel: facets of the circuit and extension-shaped
    // sets T_p + {m}.  Everything else is unrelated to this circuit.
    auto explained_by_ii = [&out](const Tuple& s) {
        for (const auto& fam : out.type_ii)
            if (fam.complete() &&
                std::find(fam.in_rel.begin(), fam.in_rel.end(), s) != fam.in_rel.end())
                return true;
        return false;
    };
    auto explained_by_iii = [&out, &complete_iii](const Tuple& s) {
        for (const auto& fam : out.type_iii)
            if (std::find(complete_iii.begin(), complete_iii.end(), fam.m) != complete_iii.end() &&
                std::find(fam.in_rel.begin(), fam.in_rel.end(), s) != fam.in_rel.end())
                return true;
        return false;
    };
    auto rel_ext = rel.find(q1);
    if (rel_ext != rel.end()) {
        for (const Tuple& s : rel_ext->second) {
            if (static_cast<int>(set_intersection(s, circuit).size()) != q1 - 1) continue;
            if (!explained_by_ii(s) && !explained_by_iii(s)) out.unexplained.push_back(s);
        }
    }

    if (strict && !out.unexplained.empty())
        throw std::invalid_argument("not a covering degeneration of this circuit: unexplained " +
                                    tuple_list(out.unexplained) + " around " + tuple_label(circuit));
    return out;
}

CoverReport check_cover_necessary(const CombinatorialType& tprime, const CombinatorialType& t,
                                  const Arrangement* arrprime) {
    CoverReport report;
    auto add = [&report](const std::string& id, bool pass, const std::string& details) {
        report.conditions.push_back(CoverCondition{id, pass, details});
    };

    if (!is_degeneration(tprime, t)) {
        add("proper", false, "Dep of the degenerate type does not contain Dep of the base type");
        return report;
    }
    const auto rel = relative_dep(tprime, t);
    size_t rel_count = 0;
    for (const auto& [q, sets] : rel) rel_count += sets.size();
    add("proper", rel_count > 0, rel_count > 0 ? "" : "the two types have identical dependence sets");

    // Closure: when two facets of W are dependent and the common sub-facet
    // W - {i,j} is independent, every facet of W must be dependent.
    {
        std::vector<std::string> violations;
        for (int w = 3; w <= t.ell + 2 && w <= t.n + 1; ++w) {
            for (const Tuple& W : subsets_lex(t.n + 1, w)) {
                bool triggered = false;
                for (int i = 1; i <= w && !triggered; ++i) {
                    if (!tprime.is_dependent(drop_position(W, i))) continue;
                    for (int j = i + 1; j <= w && !triggered; ++j) {
                        if (!tprime.is_dependent(drop_position(W, j))) continue;
                        Tuple sub = drop_position(W, j);
                        sub = drop_position(sub, i);  // i < j, so position i survives
                        if (!tprime.is_dependent(sub)) triggered = true;
                    }
                }
                if (!triggered) continue;
                for (int k = 1; k <= w; ++k) {
                    const Tuple F = drop_position(W, k);
                    if (!tprime.is_dependent(F))
                        violations.push_back(tuple_label(F) + " independent although " + tuple_label(W) +
                                             " has two dependent facets over an independent core");
                }
            }
        }
        add("closure", violations.empty(), violations.empty() ? "" : violations.front());
    }

    const auto circuits = t.circuits();
    std::vector<CircuitFamilies> families;
    families.reserve(circuits.size());
    for (const Tuple& c : circuits) families.push_back(classify_relevant(t, c, rel, false));

    {
        std::vector<std::string> violations;
        for (const auto& fam : families)
            if (fam.facets_in_rel.size() > 1) {
                std::string facets;
                for (int p : fam.facets_in_rel)
                    facets += (facets.empty() ? "" : ", ") + tuple_label(drop_position(fam.circuit, p));
                violations.push_back("circuit " + tuple_label(fam.circuit) + " has several facets in rel: " + facets);
            }
        add("facet_uniqueness", violations.empty(), violations.empty() ? "" : violations.front());
    }

    {
        std::vector<std::string> violations;
        for (const auto& fam : families) {
            for (const auto& f2 : fam.type_ii)
                if (!f2.complete())
                    violations.push_back("circuit " + tuple_label(fam.circuit) + ": family through facet " +
                                         tuple_label(drop_position(fam.circuit, f2.p)) + " is missing " +
                                         tuple_list(f2.missing));
            if (!fam.unexplained.empty())
                violations.push_back("circuit " + tuple_label(fam.circuit) + ": " + tuple_list(fam.unexplained) +
                                     " fit no complete family");
        }
        add("type_pattern", violations.empty(), violations.empty() ? "" : violations.front());
    }

    if (arrprime != nullptr) {
        add("realization", dep_sets(*arrprime) == tprime,
            dep_sets(*arrprime) == tprime ? "" : "dep_sets of the realization disagrees with the degenerate type");

        std::vector<std::string> violations;
        for (const auto& fam : families) {
            auto expect = [&](const Tuple& S, int expected) {
                const int got = multiplicity(*arrprime, S);
                if (got != expected) {
                    std::ostringstream os;
                    os << tuple_label(S) << " has multiplicity " << got << ", expected " << expected
                       << " (circuit " << tuple_label(fam.circuit) << ")";
                    violations.push_back(os.str());
                }
            };
            auto is_intersection = [&fam](const Tuple& S) {
                return std::binary_search(fam.intersections.begin(), fam.intersections.end(), S);
            };
            for (int p : fam.facets_in_rel) expect(drop_position(fam.circuit, p), 1);
            for (const auto& f2 : fam.type_ii)
                for (const Tuple& S : f2.in_rel)
                    if (!is_intersection(S)) expect(S, 1);
            for (const auto& f3 : fam.type_iii)
                for (const Tuple& S : f3.in_rel)
                    if (!is_intersection(S)) expect(S, 1);
            for (const Tuple& S : fam.intersections) expect(S, 2);
        }
        add("multiplicity", violations.empty(), violations.empty() ? "" : violations.front());
    }

    return report;
}

Tuple flat_closure(const Arrangement& a, const Tuple& C) {
    require_index_set(C, a.n + 1, "flat_closure");
    const int r = rank_of(a, C);
    Tuple out;
    for (int j = 1; j <= a.n; ++j) {
        Tuple withj = set_union(C, Tuple{j});
        if (rank_of(a, withj) == r) out.push_back(j);
    }
    return out;
}

}  // namespace gmconn
