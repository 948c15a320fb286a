#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace gmconn {

/// Exact rational scalar used throughout the library.
using Q = mpq_class;

/// Parse "p", "-p", or "p/q" (arbitrary precision) into a canonical rational.
inline Q parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    mpq_t raw;
    mpq_init(raw);
    if (mpq_set_str(raw, s.c_str(), 10) != 0) {
        mpq_clear(raw);
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(raw)) == 0) {
        mpq_clear(raw);
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    }
    mpq_canonicalize(raw);
    Q out(raw);
    mpq_clear(raw);
    return out;
}

inline std::string rat_to_string(const Q& x) { return x.get_str(); }

/// True when x is an integer >= 0 (the excluded weight values in the
/// nonresonance conditions).
inline bool is_nonnegative_integer(const Q& x) {
    return x >= 0 && x.get_den() == 1;
}

}  // namespace gmconn
