#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gmconn/linalg.hpp"
#include "gmconn/rational.hpp"

namespace gmconn {

/// Monomial in the weight variables y1, y2, ...: sorted (variable, exponent)
/// pairs with positive exponents.  The empty monomial is 1.
using Monomial = std::vector<std::pair<int, int>>;

/// Sparse multivariate polynomial over Q in the variables y1, y2, ....
/// Canonical representation (sorted monomials, no zero coefficients), so
/// equality is structural.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(const Q& c) { if (c != 0) terms_[Monomial{}] = c; }
    PolyQ(int c) : PolyQ(Q(c)) {}

    static PolyQ variable(int j, int exp = 1);

    const std::map<Monomial, Q>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const PolyQ& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyQ& o) const { return !(*this == o); }
    /// Map ordering; deterministic, used only for container keys.
    bool operator<(const PolyQ& o) const { return terms_ < o.terms_; }

    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ operator-() const;
    PolyQ& add_term(const Monomial& m, const Q& c);

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Every term has total degree exactly one.
    bool is_homogeneous_linear() const;

    /// Evaluate with y_j = values[j-1]; variables beyond values.size() are
    /// rejected.
    Q evaluate(const std::vector<Q>& values) const;

    std::string to_string() const;
    static PolyQ parse(const std::string& text);

private:
    std::map<Monomial, Q> terms_;
};

PolyQ operator+(PolyQ a, const PolyQ& b);
PolyQ operator-(PolyQ a, const PolyQ& b);
PolyQ operator*(const PolyQ& a, const PolyQ& b);
PolyQ operator*(const Q& c, const PolyQ& p);

/// The linear form y_{j1} + ... + y_{jk} for an index set.
PolyQ linear_sum(const std::vector<int>& indices);

/// Dense matrix over PolyQ; maps act on coordinate columns.
class PolyMat {
public:
    PolyMat() : rows_(0), cols_(0) {}
    PolyMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static PolyMat identity(int n) {
        PolyMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = PolyQ(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    PolyQ& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const PolyQ& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const PolyMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const {
        for (const PolyQ& p : data_)
            if (!p.is_zero()) return false;
        return true;
    }

    PolyMat transposed() const {
        PolyMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    QMat evaluate(const std::vector<Q>& values) const;

private:
    int rows_, cols_;
    std::vector<PolyQ> data_;
};

PolyMat operator*(const PolyMat& a, const PolyMat& b);
PolyMat operator+(const PolyMat& a, const PolyMat& b);
PolyMat operator-(const PolyMat& a, const PolyMat& b);
PolyMat operator*(const PolyQ& c, const PolyMat& m);

/// Promote an exact rational matrix to a polynomial matrix.
PolyMat to_poly(const QMat& m);

}  // namespace gmconn
