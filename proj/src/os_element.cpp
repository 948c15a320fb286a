#include "gmconn/os_element.hpp"

#include <sstream>
#include <stdexcept>

namespace gmconn {

OSElement OSElement::generator(const Tuple& t, const PolyQ& coeff) {
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] >= t[i + 1]) throw std::invalid_argument("generator tuple must be strictly increasing");
    OSElement e;
    e.add_term(t, coeff);
    return e;
}

OSElement OSElement::weight_one_form(int n) {
    OSElement e;
    for (int j = 1; j <= n; ++j) e.add_term(Tuple{j}, PolyQ::variable(j));
    return e;
}

int OSElement::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.size());
}

OSElement& OSElement::add_term(const Tuple& t, const PolyQ& c) {
    if (c.is_zero()) return *this;
    if (!terms_.empty() && terms_.begin()->first.size() != t.size())
        throw std::invalid_argument("mixed degrees in one element");
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

OSElement& OSElement::operator+=(const OSElement& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

OSElement& OSElement::operator-=(const OSElement& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

OSElement OSElement::operator-() const {
    OSElement r;
    for (const auto& [t, c] : terms_) r.terms_[t] = -c;
    return r;
}

OSElement operator+(OSElement a, const OSElement& b) { a += b; return a; }
OSElement operator-(OSElement a, const OSElement& b) { a -= b; return a; }

OSElement operator*(const PolyQ& c, OSElement a) {
    OSElement r;
    for (const auto& [t, tc] : a.terms()) r.add_term(t, c * tc);
    return r;
}

OSElement wedge(const OSElement& a, const OSElement& b) {
    OSElement r;
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            Tuple joined = ta;
            joined.insert(joined.end(), tb.begin(), tb.end());
            int sign = sort_with_sign(joined);
            if (sign == 0) continue;
            r.add_term(joined, Q(sign) * (ca * cb));
        }
    }
    return r;
}

OSElement boundary_del(const OSElement& e) {
    OSElement r;
    for (const auto& [t, c] : e.terms()) {
        int sign = 1;
        for (size_t k = 0; k < t.size(); ++k) {
            r.add_term(drop_position(t, static_cast<int>(k) + 1), Q(sign) * c);
            sign = -sign;
        }
    }
    return r;
}

std::string OSElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        std::string cs = c.to_string();
        bool simple = c.terms().size() == 1;
        if (!first) out << " + ";
        first = false;
        if (t.empty()) {
            out << (simple ? cs : "(" + cs + ")");
            continue;
        }
        if (cs == "1") {
            out << tuple_label(t);
        } else if (cs == "-1") {
            out << "-" << tuple_label(t);
        } else if (simple) {
            out << cs << " * " << tuple_label(t);
        } else {
            out << "(" << cs << ") * " << tuple_label(t);
        }
    }
    return out.str();
}

}  // namespace gmconn
