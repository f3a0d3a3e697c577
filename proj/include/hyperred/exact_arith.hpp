#pragma once

// Bezout machinery, resultants, squarefree factorization and partial
// fractions over any level of the tower.

#include <utility>
#include <vector>

#include "hyperred/upoly.hpp"
#include "hyperred/value.hpp"

namespace hyperred {

struct ExtendedGcd {
    Poly g, u, v; // u*p + v*q = g, g monic (or zero)
};

inline ExtendedGcd extended_gcd(const Poly& p, const Poly& q) {
    require_same_var(p, q);
    int var = p.var;
    Poly r0 = p, r1 = q;
    Poly u0 = poly_one(var), u1 = poly_zero(var);
    Poly v0 = poly_zero(var), v1 = poly_one(var);
    while (!r1.is_zero()) {
        auto [qt, r2] = divmod(r0, r1);
        Poly u2 = u0 - qt * u1;
        Poly v2 = v0 - qt * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {poly_zero(var), poly_zero(var), poly_zero(var)};
    Value li = inv(lc(r0));
    return {scale(r0, li), scale(u0, li), scale(v0, li)};
}

// u*p + v*q = r with deg(v) < deg(p) whenever deg(r) < deg(p) + deg(q).
inline std::pair<Poly, Poly> solve_diophantine(const Poly& p, const Poly& q, const Poly& r) {
    ExtendedGcd e = extended_gcd(p, q);
    if (e.g.is_zero()) {
        if (r.is_zero()) return {poly_zero(p.var), poly_zero(p.var)};
        throw NoSolution("gcd(p, q) does not divide r");
    }
    auto [c, rest] = divmod(r, e.g);
    if (!rest.is_zero()) throw NoSolution("gcd(p, q) does not divide r");
    Poly v0 = e.v * c;
    Poly v = p.deg() > 0 ? rem(v0, p) : poly_zero(p.var);
    Poly u = exact_div(r - v * q, p);
    return {u, v};
}

// ---- resultants ---------------------------------------------------------------

// Subresultant core on primitive denominator-free inputs (Ducos/Cohen style).
// Sign convention: Sylvester determinant with the rows of the first argument
// placed first, so resultant(t - a, t - b) = a - b.
inline Value resultant_ring(Poly A, Poly B) {
    Value s(1);
    Value t(1);
    if (A.deg() < B.deg()) {
        if ((A.deg() & 1) && (B.deg() & 1)) s = -s;
        std::swap(A, B);
    }
    if (B.deg() == 0) return value_pow(B.c[0], A.deg());
    Value g(1), h(1);
    while (true) {
        int delta = A.deg() - B.deg();
        if ((A.deg() & 1) && (B.deg() & 1)) s = -s;
        Poly R = prem(A, B);
        A = std::move(B);
        B = scale(R, inv(g * value_pow(h, delta)));
        g = lc(A);
        if (delta > 0) h = value_pow(g, delta) / value_pow(h, delta - 1);
        if (B.is_zero()) return Value(0);
        if (B.deg() == 0) {
            Value out = value_pow(B.c[0], A.deg()) / value_pow(h, A.deg() - 1);
            return s * t * out;
        }
    }
}

inline Value resultant(const Poly& p, const Poly& q) {
    require_same_var(p, q);
    if (p.is_zero() || q.is_zero()) {
        if (p.deg() == 0 || q.deg() == 0) return Value(0); // res with a constant and zero
        return Value(0);
    }
    if (p.deg() == 0) return value_pow(p.c[0], q.deg());
    if (q.deg() == 0) return value_pow(q.c[0], p.deg());
    Poly A0 = cleared(p);
    Value la = common_denominator(p);
    Value ca = poly_content(A0);
    Poly A = scale(A0, inv(ca));
    Poly B0 = cleared(q);
    Value lb = common_denominator(q);
    Value cb = poly_content(B0);
    Poly B = scale(B0, inv(cb));
    Value unit = value_pow(ca / la, q.deg()) * value_pow(cb / lb, p.deg());
    return unit * resultant_ring(std::move(A), std::move(B));
}

// Polynomials in a formal constant z with tower-element coefficients.
using ParamPoly = UPoly<Value>;

// A polynomial in `var` whose coefficients also carry z: zc[j] is the t-poly
// coefficient of z^j.
struct ZLinPoly {
    std::vector<Poly> zc;

    int deg_var() const {
        int d = -1;
        for (const auto& p : zc) d = std::max(d, p.deg());
        return d;
    }
    int deg_z() const {
        int d = -1;
        for (int j = 0; j < static_cast<int>(zc.size()); ++j)
            if (!zc[static_cast<std::size_t>(j)].is_zero()) d = j;
        return d;
    }
    Poly at(const Value& z) const {
        if (zc.empty()) throw InternalError("empty parametric polynomial");
        Poly r = poly_zero(zc[0].var);
        Value zp(1);
        for (const auto& p : zc) {
            r = r + scale(p, zp);
            zp = zp * z;
        }
        return r;
    }
    // leading coefficient in `var` as a polynomial in z
    ParamPoly lead_in_var() const {
        int d = deg_var();
        ParamPoly l;
        for (const auto& p : zc) l.c.push_back(coeff(p, d));
        l.trim();
        return l;
    }
};

// resultant_var(A(z), B(z)) as a polynomial in z, by evaluation at enough
// integer points and interpolation; points where either leading coefficient
// degenerates are skipped so evaluation commutes with the resultant.
inline ParamPoly resultant_param(const ZLinPoly& A, const ZLinPoly& B) {
    int da = A.deg_var(), db = B.deg_var();
    if (da < 0 || db < 0) return ParamPoly::zero();
    int za = A.deg_z() < 0 ? 0 : A.deg_z();
    int zb = B.deg_z() < 0 ? 0 : B.deg_z();
    int bound = da * zb + db * za; // deg_z of the resultant is at most this
    ParamPoly la = A.lead_in_var();
    ParamPoly lb = B.lead_in_var();
    std::vector<Value> points, values;
    long candidate = 0;
    while (static_cast<int>(points.size()) < bound + 1) {
        Value z{Rational(candidate)};
        ++candidate;
        if (ueval(la, z).is_zero() || ueval(lb, z).is_zero()) continue;
        points.push_back(z);
        values.push_back(resultant(A.at(z), B.at(z)));
    }
    return uinterpolate(points, values);
}

// ---- squarefree factorization (Yun) --------------------------------------------

struct SquarefreeFactor {
    Poly factor; // monic, squarefree
    int multiplicity;
};

struct SquarefreeFactorization {
    Value unit; // p = unit * prod factor^multiplicity
    std::vector<SquarefreeFactor> factors;
};

inline SquarefreeFactorization squarefree_factorization(const Poly& p) {
    if (p.is_zero()) throw PreconditionViolated("squarefree factorization of zero");
    SquarefreeFactorization out{lc(p), {}};
    Poly a = monic(p);
    if (a.deg() == 0) return out;
    Poly ap = d_dvar(a);
    Poly g = poly_gcd(a, ap);
    if (g.deg() == 0) {
        out.factors.push_back({a, 1});
        return out;
    }
    Poly c = exact_div(a, g);
    Poly d = exact_div(ap, g) - d_dvar(c);
    int i = 1;
    while (c.deg() > 0) {
        Poly f = poly_gcd(c, d);
        if (f.deg() > 0) out.factors.push_back({f, i});
        c = exact_div(c, f);
        d = exact_div(d, f) - d_dvar(c);
        ++i;
        if (i > p.deg() + 1) throw InternalError("squarefree factorization did not terminate");
    }
    return out;
}

// ---- partial fractions ----------------------------------------------------------

struct PartialFractionPart {
    Poly part;
    int multiplicity;
    std::vector<Poly> numerators; // numerators[j-1] / part^j, deg < deg part
};

struct PartialFractions {
    Poly poly_part;
    std::vector<PartialFractionPart> parts;
};

namespace detail {

// split N / prod(moduli) into a sum of proper fractions over each modulus;
// requires deg N < deg prod and pairwise coprime moduli.
inline void multi_split(const Poly& n, const std::vector<Poly>& moduli, std::size_t from,
                        std::vector<Poly>& out) {
    if (from + 1 == moduli.size()) {
        out.push_back(n);
        return;
    }
    Poly rest = poly_one(n.var);
    for (std::size_t i = from + 1; i < moduli.size(); ++i) rest = rest * moduli[i];
    auto [u, v] = solve_diophantine(moduli[from], rest, n);
    // n / (m*rest) = u/rest + v/m
    out.push_back(v);
    multi_split(u, moduli, from + 1, out);
}

} // namespace detail

inline PartialFractions partial_fractions(const Value& f, int var,
                                          const std::vector<std::pair<Poly, int>>& parts) {
    Poly num = num_at(f, var);
    Poly den = den_at(f, var);
    Poly prod = poly_one(var);
    for (const auto& [p, m] : parts) prod = prod * poly_pow(p, m);
    // up to a unit: compare monic forms
    if (!(monic(prod) == monic(den)) && !(den.deg() == 0 && prod.deg() == 0))
        throw PreconditionViolated("parts do not multiply to the denominator");
    Value unit = lc(den) / lc(prod);
    num = scale(num, inv(unit)); // fold the unit into the numerator

    PartialFractions out;
    auto [pp, rest] = divmod(num, prod);
    out.poly_part = pp;
    if (parts.empty() || rest.is_zero()) {
        for (const auto& [p, m] : parts) out.parts.push_back({p, m, std::vector<Poly>(m, poly_zero(var))});
        return out;
    }
    std::vector<Poly> moduli;
    for (const auto& [p, m] : parts) moduli.push_back(poly_pow(p, m));
    std::vector<Poly> tops;
    detail::multi_split(rest, moduli, 0, tops);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& [p, m] = parts[i];
        PartialFractionPart entry{p, m, std::vector<Poly>(m, poly_zero(var))};
        // p-adic digits of tops[i] over p: tops[i] = sum digits_j * p^j
        Poly t = tops[i];
        for (int j = m; j >= 1 && !t.is_zero(); --j) {
            auto [q, r] = divmod(t, p);
            entry.numerators[static_cast<std::size_t>(j - 1)] = r;
            t = q;
        }
        if (!t.is_zero()) throw InternalError("partial fraction digit overflow");
        out.parts.push_back(std::move(entry));
    }
    return out;
}

inline Value recombine(const PartialFractions& pf, int var) {
    Value acc = value_from_poly(pf.poly_part);
    for (const auto& entry : pf.parts) {
        for (int j = 1; j <= entry.multiplicity; ++j) {
            const Poly& n = entry.numerators[static_cast<std::size_t>(j - 1)];
            if (n.is_zero()) continue;
            acc = acc + normalize_fraction(n, poly_pow(entry.part, j));
        }
    }
    return acc;
}

// Convenience: squarefree partial fraction decomposition of f at var.
inline PartialFractions squarefree_partial_fractions(const Value& f, int var) {
    Poly den = den_at(f, var);
    if (den.deg() == 0) {
        PartialFractions out;
        out.poly_part = num_at(f, var);
        return out;
    }
    auto sq = squarefree_factorization(den);
    std::vector<std::pair<Poly, int>> parts;
    for (const auto& s : sq.factors) parts.emplace_back(s.factor, s.multiplicity);
    return partial_fractions(f, var, parts);
}

} // namespace hyperred
