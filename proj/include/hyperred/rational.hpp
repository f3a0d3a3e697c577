#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>

#include "hyperred/errors.hpp"

namespace hyperred {

// The constant field: exact arbitrary-precision rationals backed by GMP.
// mpq_class keeps the canonical form we rely on for structural equality:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) {
    if (d == 0) throw ZeroDenominator();
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with arbitrary-precision parts.
inline Rational rat_from_string(const std::string& s) {
    try {
        Rational r(s);
        if (r.get_den() == 0) throw ZeroDenominator();
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw EvaluationError("malformed rational literal '" + s + "'");
    }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Only valid when the value fits; callers guard with is_integer + magnitude.
inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw EvaluationError("rational is not an integer: " + to_string(r));
    if (!r.get_num().fits_slong_p()) throw EvaluationError("integer too large: " + to_string(r));
    return r.get_num().get_si();
}

inline Rational rat_gcd(const Rational& a, const Rational& b) {
    // Content-style gcd: gcd of numerators over lcm of denominators.
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    mpz_class gn, ld;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rational g(gn, ld);
    g.canonicalize();
    return g;
}

} // namespace hyperred
