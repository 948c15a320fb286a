#pragma once

#include <map>
#include <string>

#include "gmconn/poly.hpp"
#include "gmconn/tuples.hpp"

namespace gmconn {

/// Formal sum of exterior-algebra generators a_T with polynomial coefficients
/// in the weight variables.  Keys are strictly increasing index tuples; all
/// tuples in one element share a common length (its degree).  The empty tuple
/// stands for the unit 1.
class OSElement {
public:
    OSElement() = default;

    /// The single generator a_T (unit for the empty tuple).
    static OSElement generator(const Tuple& t, const PolyQ& coeff = PolyQ(1));

    /// Sum of y_j * a_j over j in 1..n.
    static OSElement weight_one_form(int n);

    const std::map<Tuple, PolyQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Common tuple length; -1 for the zero element.
    int degree() const;

    bool operator==(const OSElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const OSElement& o) const { return !(*this == o); }

    OSElement& add_term(const Tuple& t, const PolyQ& c);
    OSElement& operator+=(const OSElement& o);
    OSElement& operator-=(const OSElement& o);
    OSElement operator-() const;

    std::string to_string() const;

private:
    std::map<Tuple, PolyQ> terms_;
};

OSElement operator+(OSElement a, const OSElement& b);
OSElement operator-(OSElement a, const OSElement& b);
OSElement operator*(const PolyQ& c, OSElement a);

/// Exterior product.  Tuples are concatenated and sorted with sign;
/// repeated indices kill the term.
OSElement wedge(const OSElement& a, const OSElement& b);

/// The boundary map on generators:
/// del(a_T) = sum_k (-1)^(k-1) a_{T with k-th entry dropped}, del(a_j) = 1,
/// del(1) = 0; extended linearly over coefficients.
OSElement boundary_del(const OSElement& e);

}  // namespace gmconn
