#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace gmconn {

/// Index tuples are strictly increasing vectors of 1-based hyperplane
/// indices.  Sets of indices use the same representation (sorted vectors).
using Tuple = std::vector<int>;

/// All q-element subsets of {1,...,m} in lexicographic order.
inline std::vector<Tuple> subsets_lex(int m, int q) {
    std::vector<Tuple> out;
    if (q < 0 || q > m) return out;
    Tuple cur(q);
    for (int i = 0; i < q; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = q - 1;
        while (i >= 0 && cur[i] == m - (q - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < q; ++j) cur[j] = cur[j - 1] + 1;
    }
    if (q == 0) { out.clear(); out.push_back(Tuple{}); }
    return out;
}

/// Sort a tuple with possibly unordered, distinct entries; returns the
/// permutation sign (+1/-1), or 0 when two entries coincide.
inline int sort_with_sign(Tuple& t) {
    int sign = 1;
    for (size_t i = 1; i < t.size(); ++i) {
        size_t j = i;
        while (j > 0 && t[j - 1] > t[j]) {
            std::swap(t[j - 1], t[j]);
            sign = -sign;
            --j;
        }
        if (j > 0 && t[j - 1] == t[j]) return 0;
    }
    return sign;
}

inline bool contains(const Tuple& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

/// True when every entry of `sub` (sorted) occurs in `sup` (sorted).
inline bool is_subset(const Tuple& sub, const Tuple& sup) {
    return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

inline Tuple set_union(const Tuple& a, const Tuple& b) {
    Tuple out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Tuple set_difference(const Tuple& a, const Tuple& b) {
    Tuple out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Tuple set_intersection(const Tuple& a, const Tuple& b) {
    Tuple out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Tuple with the element at 1-based position k removed.
inline Tuple drop_position(const Tuple& t, int k) {
    Tuple out;
    out.reserve(t.size() - 1);
    for (int i = 0; i < static_cast<int>(t.size()); ++i)
        if (i != k - 1) out.push_back(t[i]);
    return out;
}

/// Render as "a[1,3]" ("1" for the empty tuple, i.e. the algebra unit).
inline std::string tuple_label(const Tuple& t) {
    if (t.empty()) return "1";
    std::string s = "a[";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    s += ']';
    return s;
}

/// Position lookup for an ordered basis of tuples.
struct TupleIndex {
    std::map<Tuple, int> pos;
    explicit TupleIndex(const std::vector<Tuple>& basis) {
        for (int i = 0; i < static_cast<int>(basis.size()); ++i) pos[basis[i]] = i;
    }
    int operator()(const Tuple& t) const {
        auto it = pos.find(t);
        return it == pos.end() ? -1 : it->second;
    }
};

}  // namespace gmconn
