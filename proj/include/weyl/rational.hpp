// Exact arithmetic kernel: unbounded integers and rationals on top of GMP.
// Rationals are kept canonical (lowest terms, positive denominator), so the
// string form is always "p" or "p/q" with q > 1.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weyl {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(std::uint64_t n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(std::uint64_t n, std::uint64_t k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw std::invalid_argument("parse_rational: bad numerator in '" + std::string(text) + "'");
    Rational r;
    if (slash == std::string_view::npos) {
        r = Rational(std::string(num), 10);
    } else {
        std::string_view den = text.substr(slash + 1);
        if (!is_integer_literal(den) || den[0] == '-' || den == "0")
            throw std::invalid_argument("parse_rational: bad denominator in '" + std::string(text) + "'");
        r = Rational(std::string(text), 10);
    }
    r.canonicalize();
    return r;
}

}  // namespace weyl
