#pragma once

#include <optional>
#include <vector>

#include "gmconn/rational.hpp"

namespace gmconn {

/// Dense exact matrix over Q.  Maps act on coordinate columns: the matrix of
/// f has f(e_j) in column j, and composition is the usual product.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Q(0)) {}

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Q& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Q& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const QMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    QMat transposed() const {
        QMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const Q& x : data_)
            if (x != 0) return false;
        return true;
    }

    /// Columns listed in `idx`, in order.
    QMat select_columns(const std::vector<int>& idx) const;

    /// Horizontal concatenation [this | other].
    QMat hcat(const QMat& other) const;

private:
    int rows_, cols_;
    std::vector<Q> data_;
};

QMat operator*(const QMat& a, const QMat& b);
QMat operator+(const QMat& a, const QMat& b);
QMat operator-(const QMat& a, const QMat& b);
std::vector<Q> operator*(const QMat& a, const std::vector<Q>& v);

/// Reduced row echelon form in place; returns the pivot column of each pivot
/// row (rank = number of pivots).
std::vector<int> rref_inplace(QMat& m);

int rank(const QMat& m);

/// Rank obtained by scanning square minors (largest size with a nonzero
/// determinant, determinants by cofactor expansion).  Independent of the
/// echelon path; used as an oracle in tests.
int rank_by_minors(const QMat& m);

/// Determinant of a square matrix by cofactor expansion.
Q det_by_cofactors(const QMat& m);

/// Ordered basis of {x : m x = 0} (columns of the result), from the reduced
/// echelon form, with free columns in increasing order.
QMat nullspace(const QMat& m);

/// Solve m X = b exactly for all columns of b at once.  Returns std::nullopt
/// when any column is inconsistent.  When the system is underdetermined the
/// free variables are set to zero (deterministic).
std::optional<QMat> solve(const QMat& m, const QMat& b);

/// Inverse of a square matrix; std::nullopt when singular.
std::optional<QMat> inverse(const QMat& m);

}  // namespace gmconn
