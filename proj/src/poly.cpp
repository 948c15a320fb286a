#include "gmconn/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gmconn {

PolyQ PolyQ::variable(int j, int exp) {
    if (j < 1) throw std::invalid_argument("variable index must be >= 1");
    if (exp < 0) throw std::invalid_argument("negative exponent");
    PolyQ p;
    if (exp == 0) return PolyQ(1);
    p.terms_[Monomial{{j, exp}}] = 1;
    return p;
}

PolyQ& PolyQ::add_term(const Monomial& m, const Q& c) {
    if (c == 0) return *this;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Q(-c));
    return *this;
}

PolyQ PolyQ::operator-() const {
    PolyQ r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

PolyQ operator+(PolyQ a, const PolyQ& b) { a += b; return a; }
PolyQ operator-(PolyQ a, const PolyQ& b) { a -= b; return a; }

namespace {

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

}  // namespace

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    PolyQ r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(mul_monomials(ma, mb), ca * cb);
    return r;
}

PolyQ operator*(const Q& c, const PolyQ& p) {
    PolyQ r;
    if (c == 0) return r;
    for (const auto& [m, pc] : p.terms()) r.add_term(m, c * pc);
    return r;
}

PolyQ linear_sum(const std::vector<int>& indices) {
    PolyQ r;
    for (int j : indices) r += PolyQ::variable(j);
    return r;
}

int PolyQ::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int td = 0;
        for (const auto& [v, e] : m) td += e;
        if (td > d) d = td;
    }
    return d;
}

bool PolyQ::is_homogeneous_linear() const {
    for (const auto& [m, c] : terms_) {
        if (m.size() != 1 || m[0].second != 1) return false;
    }
    return !terms_.empty();
}

Q PolyQ::evaluate(const std::vector<Q>& values) const {
    Q total = 0;
    for (const auto& [m, c] : terms_) {
        Q t = c;
        for (const auto& [v, e] : m) {
            if (v < 1 || static_cast<size_t>(v) > values.size())
                throw std::out_of_range("no value supplied for variable y" + std::to_string(v));
            for (int k = 0; k < e; ++k) t *= values[static_cast<size_t>(v) - 1];
        }
        total += t;
    }
    return total;
}

std::string PolyQ::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Q ac = c < 0 ? Q(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? "-" : "+");
        }
        first = false;
        bool coeff_shown = (ac != 1) || m.empty();
        if (coeff_shown) out << rat_to_string(ac);
        bool need_star = coeff_shown;
        for (const auto& [v, e] : m) {
            if (need_star) out << "*";
            out << "y" << v;
            if (e > 1) out << "^" << e;
            need_star = true;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parser: expr := ['+'|'-'] term (('+'|'-') term)*
//         term := factor ('*' factor)*
//         factor := atom ['^' nat]
//         atom := rational | y<nat> | '(' expr ')'
// ---------------------------------------------------------------------------

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s), pos_(0) {}

    PolyQ parse() {
        PolyQ p = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument("unexpected trailing input in polynomial: '" + s_.substr(pos_) + "'");
        return p;
    }

private:
    const std::string& s_;
    size_t pos_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    PolyQ expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        PolyQ p = term();
        if (neg) p = -p;
        for (;;) {
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else break;
        }
        return p;
    }

    PolyQ term() {
        PolyQ p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    PolyQ factor() {
        PolyQ base = atom();
        if (eat('^')) {
            int e = read_nat();
            PolyQ r(1);
            for (int k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    PolyQ atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            PolyQ p = expr();
            if (!eat(')')) throw std::invalid_argument("missing ')' in polynomial");
            return p;
        }
        if (c == 'y') {
            ++pos_;
            return PolyQ::variable(read_nat());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return PolyQ(read_rational());
        throw std::invalid_argument(std::string("unexpected character '") + c + "' in polynomial");
    }

    int read_nat() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw std::invalid_argument("expected a number in polynomial");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    Q read_rational() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        size_t save = pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (dstart == pos_) pos_ = save;  // "3/" with no denominator: treat '/' as foreign
        }
        return parse_rational(s_.substr(start, pos_ - start));
    }
};

}  // namespace

PolyQ PolyQ::parse(const std::string& text) { return PolyParser(text).parse(); }

QMat PolyMat::evaluate(const std::vector<Q>& values) const {
    QMat m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(values);
    return m;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("PolyMat product shape mismatch");
    PolyMat r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const PolyQ& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                r(i, j) += aik * b(k, j);
            }
        }
    return r;
}

PolyMat operator+(const PolyMat& a, const PolyMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("PolyMat sum shape mismatch");
    PolyMat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

PolyMat operator-(const PolyMat& a, const PolyMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("PolyMat difference shape mismatch");
    PolyMat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

PolyMat operator*(const PolyQ& c, const PolyMat& m) {
    PolyMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = c * m(i, j);
    return r;
}

PolyMat to_poly(const QMat& m) {
    PolyMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = PolyQ(m(i, j));
    return r;
}

}  // namespace gmconn
