#pragma once
// Exact integer and rational arithmetic, backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maglat {

using Int = mpz_class;
using Rational = mpq_class;

/// num/den reduced to lowest terms; throws on zero denominator.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Binomial coefficient C(n, k); zero for k > n.
inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// base^e for integer e (negative e inverts; throws on 0^negative).
inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0 to negative power");
        return Rational(0);
    }
    Rational b = base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) acc = Rational(1) / acc;
    return acc;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "a/b" or "a" (optionally signed); throws on malformed input.
inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace maglat
