#include "gmconn/linalg.hpp"

#include <stdexcept>

namespace gmconn {

QMat QMat::select_columns(const std::vector<int>& idx) const {
    QMat out(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < static_cast<int>(idx.size()); ++j) out(i, j) = (*this)(i, idx[j]);
    return out;
}

QMat QMat::hcat(const QMat& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("hcat: row mismatch");
    QMat out(rows_, cols_ + other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (int j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
    }
    return out;
}

QMat operator*(const QMat& a, const QMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    QMat out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Q& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) out(i, j) += aik * b(k, j);
        }
    return out;
}

QMat operator+(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shape mismatch");
    QMat out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

QMat operator-(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference: shape mismatch");
    QMat out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

std::vector<Q> operator*(const QMat& a, const std::vector<Q>& v) {
    if (a.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<Q> out(a.rows(), Q(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
    return out;
}

std::vector<int> rref_inplace(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Q inv = Q(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Q f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const QMat& m) {
    QMat c = m;
    return static_cast<int>(rref_inplace(c).size());
}

Q det_by_cofactors(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return Q(1);
    if (n == 1) return m(0, 0);
    Q acc(0);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        if (m(0, k) != 0) {
            QMat sub(n - 1, n - 1);
            for (int i = 1; i < n; ++i) {
                int jj = 0;
                for (int j = 0; j < n; ++j) {
                    if (j == k) continue;
                    sub(i - 1, jj++) = m(i, j);
                }
            }
            acc += sign * m(0, k) * det_by_cofactors(sub);
        }
        sign = -sign;
    }
    return acc;
}

namespace {
void enumerate_index_sets(int m, int q, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(q);
    if (q == 0 || q > m) return;
    for (int i = 0; i < q; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = q - 1;
        while (i >= 0 && cur[i] == m - (q - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < q; ++j) cur[j] = cur[j - 1] + 1;
    }
}
}  // namespace

int rank_by_minors(const QMat& m) {
    int bound = std::min(m.rows(), m.cols());
    for (int size = bound; size >= 1; --size) {
        std::vector<std::vector<int>> rsets, csets;
        enumerate_index_sets(m.rows(), size, rsets);
        enumerate_index_sets(m.cols(), size, csets);
        for (const auto& rs : rsets)
            for (const auto& cs : csets) {
                QMat sub(size, size);
                for (int i = 0; i < size; ++i)
                    for (int j = 0; j < size; ++j) sub(i, j) = m(rs[i], cs[j]);
                if (det_by_cofactors(sub) != 0) return size;
            }
    }
    return 0;
}

QMat nullspace(const QMat& m) {
    QMat r = m;
    std::vector<int> pivots = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMat out(m.cols(), static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int fc = free_cols[k];
        out(fc, k) = 1;
        for (int pi = 0; pi < static_cast<int>(pivots.size()); ++pi)
            out(pivots[pi], k) = -r(pi, fc);
    }
    return out;
}

std::optional<QMat> solve(const QMat& m, const QMat& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    QMat aug = m.hcat(b);
    std::vector<int> pivots = rref_inplace(aug);
    // A pivot in the augmented part means some column of b is inconsistent.
    for (int c : pivots)
        if (c >= m.cols()) return std::nullopt;
    QMat x(m.cols(), b.cols());
    for (int pi = 0; pi < static_cast<int>(pivots.size()); ++pi)
        for (int j = 0; j < b.cols(); ++j) x(pivots[pi], j) = aug(pi, m.cols() + j);
    return x;
}

std::optional<QMat> inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    auto x = solve(m, QMat::identity(m.rows()));
    if (!x) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return x;
}

}  // namespace gmconn
