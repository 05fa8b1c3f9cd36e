#ifndef RESOLVENT_RATIONAL_HPP
#define RESOLVENT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "resolvent/errors.hpp"

namespace resolvent {

// Exact rational numbers. gmp keeps the invariant gcd(|num|, den) = 1, den >= 1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw argument_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Parses "num" or "num/den"; used by the JSON coefficient codecs.
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw parse_error("bad rational literal '" + s + "'", 0);
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    Rational b = exp > 0 ? base : Rational(1) / base;
    unsigned long e = static_cast<unsigned long>(exp > 0 ? exp : -exp);
    Rational r(1);
    while (e > 0) {
        if (e & 1ul) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace resolvent

#endif
