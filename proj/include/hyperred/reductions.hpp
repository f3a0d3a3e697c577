#pragma once

// The generalized shell, kernel, and kernel-shell reductions.  For a
// weakly normalized direction f, every g decomposes as
//
//   g = a' + a f + h + r/den(f)
//
// with h t-simple (den(h) | den(g), coprime to den(f)) and r t-reduced.

#include <utility>
#include <vector>

#include "hyperred/exact_arith.hpp"
#include "hyperred/kernel_shell.hpp"
#include "hyperred/tower.hpp"

namespace hyperred {

struct GsrResult {
    Value a;
    Value h;
    Poly q; // remainder numerator over den(f)
};

struct GkrResult {
    Value a;
    Poly q;
};

struct ReductionCertificate {
    Value a;
    Value h; // t-simple
    Value r; // t-reduced; the residual term is r / den(f)
    Value f; // the reducing direction
    int level;
};

inline Value certificate_residue(const ReductionCertificate& c) {
    return c.r / value_from_poly(den_at(c.f, c.level));
}

// g - (a' + a f + h + r/den(f)), which must normalize to zero
inline Value certificate_defect(const ReductionCertificate& c, const Value& g, const TowerSpec& spec) {
    return g - derive(c.a, spec) - c.a * c.f - c.h - certificate_residue(c);
}

// ---- Algorithm GSR ------------------------------------------------------------

inline GsrResult gsr(const Value& f, const Value& g, const TowerSpec& spec, int level) {
    Poly df = den_at(f, level);
    Poly nf = num_at(f, level);
    Poly dg = den_at(g, level);
    if (level >= 1) {
        int m = 0;
        while (m <= dg.deg() && coeff(dg, m).is_zero()) ++m;
        if (m > 0) throw PreconditionViolated("den(g) has a nontrivial special factor");
    }
    if (poly_gcd(dg, df).deg() != 0)
        throw PreconditionViolated("den(g) is not coprime with den(f)");
    GsrResult out{Value(0), Value(0), poly_zero(level)};
    if (g.is_zero()) return out;

    auto pf = squarefree_partial_fractions(g, level);
    out.q = pf.poly_part * df;

    const bool f_is_poly = df.deg() == 0; // then neither Bezout split against den(f) is needed
    for (const auto& entry : pf.parts) {
        const Poly& p = entry.part;
        Poly dp = derive_poly(p, spec);
        Value v_total(0);
        for (int j = entry.multiplicity; j >= 1; --j) {
            Poly q0 = entry.numerators[static_cast<std::size_t>(j - 1)];
            int m = j;
            while (!q0.is_zero() && m > 1) {
                auto [u1, u2] = solve_diophantine(p, dp, q0);
                Rational cm = rat(1, m - 1);
                Poly u3 = scale(u2, Value(-cm));
                Poly u4 = scale(derive_poly(u2, spec), Value(cm)) + u1;
                out.a = out.a + normalize_fraction(u3, poly_pow(p, m - 1));
                // remaining: (-u3 f + u4) / p^(m-1)
                if (f.is_zero()) {
                    q0 = u4;
                } else if (f_is_poly) {
                    q0 = u4 - u3 * nf;
                } else {
                    Poly rhs = -(u3 * nf);
                    auto [ua, vb] = solve_diophantine(df, poly_pow(p, m - 1), rhs);
                    // rhs/(df p^(m-1)) = ua/p^(m-1) + vb/df
                    q0 = u4 + ua;
                    out.q = out.q + vb;
                }
                --m;
            }
            if (!q0.is_zero()) {
                auto [quo_part, rem_part] = divmod(q0, p);
                v_total = v_total + value_from_poly(rem_part);
                out.q = out.q + quo_part * df;
            }
        }
        if (!v_total.is_zero()) out.h = out.h + v_total / value_from_poly(p);
    }
    return out;
}

// ---- Algorithm GKR ------------------------------------------------------------

inline GkrResult gkr(const Value& f, const Poly& p_in, int m, const TowerSpec& spec, int level,
                     bool check_normalized = true) {
    if (m < 1) throw PreconditionViolated("gkr needs m >= 1");
    Poly df = den_at(f, level);
    if (check_normalized && df.deg() > 0 &&
        !is_weakly_normalized(f, spec, level, KernelMode::weak).ok)
        throw NotWeaklyNormalized();
    Poly nf = num_at(f, level);
    Poly dfp = derive_poly(df, spec);
    GkrResult out{Value(0), p_in};
    while (m > 1 && !out.q.is_zero()) {
        Poly lhs = nf - scale(dfp, Value(Rational(m - 1)));
        std::pair<Poly, Poly> uv;
        try {
            uv = solve_diophantine(lhs, df, out.q);
        } catch (const NoSolution&) {
            throw NotWeaklyNormalized("gcd(num(f) - (m-1) den(f)', den(f)) is nontrivial");
        }
        out.a = out.a + normalize_fraction(uv.first, poly_pow(df, m - 1));
        out.q = uv.second - derive_poly(uv.first, spec);
        --m;
    }
    return out;
}

// ---- Algorithm GKSR -----------------------------------------------------------

inline ReductionCertificate gksr(const Value& f, const Value& g, const TowerSpec& spec, int level,
                                 bool check_normalized = true) {
    Poly df = den_at(f, level);
    if (check_normalized && df.deg() > 0 &&
        !is_weakly_normalized(f, spec, level, KernelMode::weak).ok)
        throw NotWeaklyNormalized();
    ReductionCertificate cert{Value(0), Value(0), Value(0), f, level};
    if (g.is_zero()) return cert;

    Poly dg = den_at(g, level);
    Poly ng = num_at(g, level);

    // den(g) = d1 d2 d3: d1 normal and coprime with den(f), every factor of
    // d2 divides den(f), d3 a power of t coprime with den(f)
    Poly d1 = poly_one(level), d2 = poly_one(level), d3 = poly_one(level);
    bool t_in_df = level >= 1 && coeff(df, 0).is_zero();
    for (const auto& sf : squarefree_factorization(dg).factors) {
        Poly q = sf.factor;
        if (level >= 1 && coeff(q, 0).is_zero()) {
            Poly t = poly_var(level);
            Poly tm = poly_pow(t, sf.multiplicity);
            if (t_in_df) d2 = d2 * tm;
            else d3 = d3 * tm;
            q = exact_div(q, t);
        }
        if (q.deg() > 0 && df.deg() > 0) {
            Poly shared = poly_gcd(q, df);
            if (shared.deg() > 0) {
                d2 = d2 * poly_pow(shared, sf.multiplicity);
                q = exact_div(q, shared);
            }
        }
        if (q.deg() > 0) d1 = d1 * poly_pow(q, sf.multiplicity);
    }

    auto [poly_part, proper_num] = divmod(ng, dg);
    Value g1(0), g2(0), g3 = value_from_poly(poly_part);
    {
        Poly rest_num = proper_num;
        Poly rest_den = dg;
        if (d1.deg() > 0) {
            Poly other = exact_div(rest_den, d1);
            if (other.deg() > 0) {
                auto [u, v] = solve_diophantine(d1, other, rest_num);
                g1 = normalize_fraction(v, d1);
                rest_num = u;
                rest_den = other;
            } else {
                g1 = normalize_fraction(rest_num, rest_den);
                rest_num = poly_zero(level);
                rest_den = poly_one(level);
            }
        }
        if (d2.deg() > 0) {
            Poly other = exact_div(rest_den, d2);
            if (other.deg() > 0) {
                auto [u, v] = solve_diophantine(d2, other, rest_num);
                g2 = normalize_fraction(v, d2);
                rest_num = u;
                rest_den = other;
            } else {
                g2 = normalize_fraction(rest_num, rest_den);
                rest_num = poly_zero(level);
                rest_den = poly_one(level);
            }
        }
        if (!rest_num.is_zero()) g3 = g3 + normalize_fraction(rest_num, rest_den);
    }

    // step (2): shell reduction of the normal part
    GsrResult shell = gsr(f, g1, spec, level);
    cert.h = shell.h;
    Value r = value_from_poly(shell.q);

    // step (3): kernel reduction of the den(f)-supported part
    Value a2(0);
    if (!g2.is_zero()) {
        Value scaled = g2;
        int m = 0;
        Value dfv = value_from_poly(df);
        while (!is_polynomial_at(scaled, level)) {
            scaled = scaled * dfv;
            ++m;
            if (m > 512) throw InternalError("kernel part does not clear against den(f)");
        }
        if (m == 0) {
            r = r + scaled * dfv; // already polynomial; fold into the residue
        } else {
            GkrResult kr = gkr(f, num_at(scaled, level), m, spec, level, false);
            a2 = kr.a;
            r = r + value_from_poly(kr.q);
        }
    }

    // step (4): recombine
    cert.a = shell.a + a2;
    cert.r = r + g3 * value_from_poly(df);
    return cert;
}

} // namespace hyperred
