#pragma once

// The differential structure on Q(x)(t1,...,tn): tower specification,
// the derivation extending d/dx with t_i' = sigma_i * t_i, orders at
// polynomials, normal/special classification and properness splits.

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hyperred/exact_arith.hpp"
#include "hyperred/value.hpp"

namespace hyperred {

struct Generator {
    std::string name;
    Value sigma;              // logarithmic derivative t'/t, level <= index-1
    std::string declared_form; // textual origin, e.g. "exp(x)" or "exp(int(1/(x^3-x-2)))"
    bool derivative_degree_le_1 = true; // deg_t(t') <= 1; holds for every hyperexponential generator
};

struct TowerSpec {
    std::vector<Generator> generators; // generators[i-1] describes t_i
    // The tower is *assumed* regular (no new constants).  Deciding this needs
    // structure theorems outside this engine; it is a user-supplied hypothesis.
    bool assume_regular = true;

    int depth() const { return static_cast<int>(generators.size()); }

    const Generator& gen(int var) const {
        if (var < 1 || var > depth()) throw InternalError("generator index out of range");
        return generators[static_cast<std::size_t>(var - 1)];
    }

    // sigma_j in Q(x) for all j <= level
    bool rht_up_to(int level) const {
        for (int j = 1; j <= std::min(level, depth()); ++j)
            if (gen(j).sigma.level() > 0) return false;
        return true;
    }
    bool is_rht() const { return rht_up_to(depth()); }

    void validate() const {
        for (int i = 1; i <= depth(); ++i) {
            const Generator& g = gen(i);
            if (g.name.empty()) throw UnsupportedTower("generator " + std::to_string(i) + " has no name");
            if (g.sigma.level() > i - 1)
                throw UnsupportedTower("logarithmic derivative of " + g.name + " lives above F_" + std::to_string(i - 1));
            for (int j = 1; j < i; ++j)
                if (gen(j).name == g.name) throw DuplicateGenerator(g.name);
            if (g.name == "x") throw DuplicateGenerator("x");
        }
    }
};

inline TowerSpec make_tower(std::vector<Generator> gens) {
    TowerSpec spec{std::move(gens)};
    spec.validate();
    return spec;
}

// ---- the derivation -------------------------------------------------------------

inline Value derive(const Value& f, const TowerSpec& spec);

// Tower derivative of a polynomial: stays a polynomial in the same variable
// because x' = 1 and t_i' = sigma_i t_i.
inline Poly derive_poly(const Poly& p, const TowerSpec& spec) {
    if (p.var == 0) return d_dvar(p);
    const Value& sigma = spec.gen(p.var).sigma;
    Poly r{p.var, {}};
    r.c.reserve(p.c.size());
    for (int k = 0; k <= p.deg(); ++k) {
        const Value& ck = p.c[static_cast<std::size_t>(k)];
        Value nk = derive(ck, spec);
        if (k > 0) nk = nk + Value(Rational(k)) * sigma * ck;
        r.c.push_back(std::move(nk));
    }
    poly_trim(r);
    return r;
}

inline Value derive(const Value& f, const TowerSpec& spec) {
    if (f.is_rational()) return Value(0);
    const Frac& fr = f.frac();
    Poly np = derive_poly(fr.num, spec);
    if (fr.den.deg() == 0) return value_from_poly(np);
    Poly dp = derive_poly(fr.den, spec);
    if (dp.is_zero()) return normalize_fraction(std::move(np), fr.den);
    // Split off e = gcd(den, den'): with den = u e and den' = v e,
    //   f' = (num' u - num v) / (u^2 e).
    // When den is squarefree with only normal factors, e = 1 and the order
    // argument rules out any cancellation, so no further gcd is needed.
    Poly e = poly_gcd(fr.den, dp);
    if (e.deg() == 0) {
        Poly n = np * fr.den - fr.num * dp;
        if (n.is_zero()) return Value(0);
        Poly d = fr.den * fr.den;
        return detail_value::make_canonical(std::move(n), std::move(d));
    }
    Poly u = exact_div(fr.den, e);
    Poly v = exact_div(dp, e);
    return normalize_fraction(np * u - fr.num * v, u * u * e);
}

// ---- orders ----------------------------------------------------------------------

inline constexpr int order_infinity = std::numeric_limits<int>::max();

inline int multiplicity_of(const Poly& p, const Poly& in) {
    int m = 0;
    Poly rest = in;
    while (!rest.is_zero() && rest.deg() >= p.deg()) {
        auto [q, r] = divmod(rest, p);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++m;
    }
    return m;
}

// nu_p(f); +infinity for f = 0
inline int order_at(const Value& f, const Poly& p) {
    if (p.deg() < 1) throw PreconditionViolated("order at a constant polynomial");
    if (f.is_zero()) return order_infinity;
    int var = p.var;
    Poly den = den_at(f, var);
    int m = multiplicity_of(p, den);
    if (m > 0) return -m;
    return multiplicity_of(p, num_at(f, var));
}

// ---- normal/special machinery ----------------------------------------------------

struct NormalSpecialSplit {
    Poly normal;             // gcd(normal, t) = 1
    Poly special;            // t^m with m = nu_t(p)
    std::optional<Poly> exceptional; // squarefree factor with gcd(q, q') not in {1, q}; cannot
                                     // occur over a hyperexponential generator, kept as a guard
};

inline NormalSpecialSplit split_normal_special(const Poly& p, const TowerSpec& spec) {
    if (p.is_zero()) throw PreconditionViolated("split of the zero polynomial");
    if (p.var < 1) throw PreconditionViolated("split needs a generator variable");
    int m = 0;
    while (m <= p.deg() && coeff(p, m).is_zero()) ++m;
    Poly special = poly_monomial(p.var, Value(1), m);
    Poly normal{p.var, std::vector<Value>(p.c.begin() + m, p.c.end())};
    NormalSpecialSplit out{normal, special, std::nullopt};
    for (const auto& sf : squarefree_factorization(normal).factors) {
        Poly g = poly_gcd(sf.factor, derive_poly(sf.factor, spec));
        if (g.deg() != 0) {
            out.exceptional = g;
            break;
        }
    }
    return out;
}

// f = properPart + laurentPart at level i, uniquely:
// properPart is normally t_i-proper, laurentPart lies in F_{i-1}[t_i^-1, t_i].
struct ProperSplit {
    Value proper;
    Value laurent;
};

inline ProperSplit proper_split(const Value& f, int level) {
    if (level < 1) throw PreconditionViolated("proper_split needs level >= 1");
    if (f.level() < level) return {Value(0), f};
    Poly num = num_at(f, level);
    Poly den = den_at(f, level);
    auto [p, r] = divmod(num, den);
    Value poly_part = value_from_poly(p);
    if (r.is_zero()) return {Value(0), poly_part};
    int m = 0;
    while (m <= den.deg() && coeff(den, m).is_zero()) ++m;
    if (m == 0) return {normalize_fraction(r, den), poly_part};
    Poly tm = poly_monomial(level, Value(1), m);
    Poly n{level, std::vector<Value>(den.c.begin() + m, den.c.end())};
    if (n.deg() == 0) return {Value(0), poly_part + normalize_fraction(r, den)};
    auto [u, v] = solve_diophantine(tm, n, r); // r = u t^m + v n, deg v < m
    return {normalize_fraction(u, n), poly_part + normalize_fraction(v, tm)};
}

// Coefficient map of a t_i-reduced element: power -> coefficient in F_{i-1}.
inline std::vector<std::pair<int, Value>> laurent_coefficients(const Value& f, int level) {
    std::vector<std::pair<int, Value>> out;
    if (f.is_zero()) return out;
    if (f.level() < level) {
        out.emplace_back(0, f);
        return out;
    }
    Poly num = num_at(f, level);
    Poly den = den_at(f, level);
    int m = den.deg();
    for (int k = 0; k < m; ++k)
        if (!coeff(den, k).is_zero()) throw PreconditionViolated("element is not t-reduced");
    for (int k = 0; k <= num.deg(); ++k)
        if (!coeff(num, k).is_zero()) out.emplace_back(k - m, coeff(num, k));
    return out;
}

inline Value from_laurent_coefficients(const std::vector<std::pair<int, Value>>& terms, int level) {
    int shift = 0;
    for (const auto& [k, c] : terms) shift = std::min(shift, k);
    Poly num = poly_zero(level);
    for (const auto& [k, c] : terms) num = num + poly_monomial(level, c, k - shift);
    return normalize_fraction(num, poly_monomial(level, Value(1), -shift));
}

// ---- classification ---------------------------------------------------------------

struct Classification {
    bool is_normal = false;
    bool is_special = false;
    bool is_proper = false;
    bool is_normally_proper = false;
    bool is_simple = false;
    bool is_reduced = false;
};

inline Classification classify(const Value& f, const TowerSpec& spec, int level) {
    if (level < 1) throw PreconditionViolated("classify needs level >= 1");
    Classification c;
    if (f.level() < level) {
        // elements of F are trivially normal and special
        c.is_normal = c.is_special = !f.is_zero();
        c.is_reduced = true;
        c.is_proper = c.is_normally_proper = c.is_simple = f.is_zero();
        return c;
    }
    Poly num = num_at(f, level);
    Poly den = den_at(f, level);
    c.is_proper = num.deg() < den.deg();
    bool t_divides_den = coeff(den, 0).is_zero();
    c.is_normally_proper = c.is_proper && !t_divides_den;
    Poly dden = derive_poly(den, spec);
    c.is_simple = c.is_proper && poly_gcd(den, dden).deg() == 0;
    c.is_reduced = true;
    for (int k = 0; k < den.deg(); ++k)
        if (!coeff(den, k).is_zero()) c.is_reduced = false;
    if (den.deg() == 0) {
        // a polynomial: apply the polynomial predicates
        Poly dnum = derive_poly(num, spec);
        c.is_normal = poly_gcd(num, dnum).deg() == 0;
        c.is_special = divides(num, dnum);
    }
    return c;
}

} // namespace hyperred
