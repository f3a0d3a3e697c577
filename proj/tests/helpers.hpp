#pragma once

// Shared helpers for the test suites: compact builders and seeded random
// generators for tower elements.

#include <random>
#include <string>
#include <vector>

#include "hyperred/exact_arith.hpp"
#include "hyperred/parse.hpp"
#include "hyperred/tower.hpp"
#include "hyperred/value.hpp"

namespace hyperred::testing {

// Common tower fixtures.
inline TowerSpec tower_t() { return build_tower({{"t", "exp(x^2/2)"}}); } // sigma = x
inline TowerSpec tower_xy() {
    // F = Q(x, y) with y' = y, extended by t = exp(x^2/2)
    return build_tower({{"y", "exp(x)"}, {"t", "exp(x^2/2)"}});
}
inline TowerSpec tower_depth3() {
    return build_tower({{"t1", "exp(x)"}, {"t2", "exp(x^2/2)"}, {"t3", "exp(-1/x)"}});
}
inline TowerSpec tower_example11() {
    return build_tower({{"t1", "exp(x)"}, {"t2", "exp(int(1/(x^3-x-2)))"}});
}

inline Value V(const std::string& text, const TowerSpec& spec) { return parse_value(text, spec); }

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    int uniform(int lo, int hi) { // inclusive
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen);
    }
    Rational small_rat(int span = 4) {
        int num = uniform(-span, span);
        int den = uniform(1, span);
        return rat(num, den);
    }
    Rational small_nonzero_rat(int span = 4) {
        Rational r = small_rat(span);
        while (r == 0) r = small_rat(span);
        return r;
    }
};

inline Value X() { return value_from_poly(poly_var(0)); }
inline Value T(int i) { return value_from_poly(poly_var(i)); }
inline Value C(long n) { return Value(n); }

// The value as a polynomial in `var` (requires denominator 1 at that level).
inline Poly as_poly(const Value& v, int var) {
    if (!is_polynomial_at(v, var)) throw InternalError("value is not polynomial at this level");
    return num_at(v, var);
}

inline Value random_value(Rng& rng, int level, int maxdeg = 2, int span = 3);

inline Poly random_poly(Rng& rng, int var, int deg, bool monic_out, int span = 3) {
    std::vector<Value> cs;
    for (int k = 0; k <= deg; ++k) {
        if (var == 0 || rng.uniform(0, 2) != 0) {
            // bias toward rational coefficients; deep nesting grows fast
            cs.emplace_back(rng.small_rat(span));
        } else {
            int lv = rng.uniform(0, var - 1);
            cs.push_back(random_value(rng, lv, 1, span));
        }
    }
    Poly p = poly_from_coeffs(var, std::move(cs));
    if (p.deg() < deg) {
        Value lead = var == 0 ? Value(rng.small_nonzero_rat(span)) : Value(1);
        p = p + poly_monomial(var, lead, deg);
    }
    return monic_out ? monic(p) : p;
}

inline Value random_value(Rng& rng, int level, int maxdeg, int span) {
    if (level < 0) return Value(rng.small_rat(span));
    Poly num = random_poly(rng, level, rng.uniform(0, maxdeg), false, span);
    Poly den = random_poly(rng, level, rng.uniform(0, maxdeg), false, span);
    while (den.is_zero()) den = random_poly(rng, level, rng.uniform(0, maxdeg), false, span);
    if (num.is_zero()) return Value(0);
    return normalize_fraction(num, den);
}

inline Value random_nonzero_value(Rng& rng, int level, int maxdeg = 2, int span = 3) {
    Value v = random_value(rng, level, maxdeg, span);
    while (v.is_zero()) v = random_value(rng, level, maxdeg, span);
    return v;
}

} // namespace hyperred::testing
