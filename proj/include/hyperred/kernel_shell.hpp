#pragma once

// Weak normalization and Algorithm GKS: for f in F(t) compute a kernel xi
// and shell eta with f = eta'/eta + xi, xi weakly normalized (or fully
// normalized), den(eta) free of nontrivial special factors and coprime in
// the required ways.
//
// Integer residue candidates at levels >= 1 come from the Rothstein-Trager
// style resultant R(z) = res_t(num(f) - z den(f)', den-part), evaluated at a
// random rational point of the lower variables; candidates are verified
// symbolically, and evaluation never loses an integer root, so the search is
// complete.  At level 0 everything is exact: the factor loop uses the
// irreducible factorization over Q[x].

#include <cstdint>
#include <random>
#include <vector>

#include "hyperred/exact_arith.hpp"
#include "hyperred/factor_q.hpp"
#include "hyperred/tower.hpp"

namespace hyperred {

enum class KernelMode { weak, normalized };

struct KernelShell {
    Value kernel;
    Value shell;
    KernelMode mode;
};

struct WeakNormalization {
    bool ok;
    long least_offender = 0; // meaningful when !ok
    Value common_factor;     // gcd(num - i den', den) for the least offender
};

inline constexpr std::uint64_t default_seed = 0x48595052u; // "HYPR"

namespace detail_ks {

inline QPoly poly_to_qpoly(const Poly& p) {
    QPoly out;
    for (const auto& c : p.c) {
        if (!c.is_rational()) throw InternalError("expected rational coefficients");
        out.c.push_back(c.rational());
    }
    out.trim();
    return out;
}

inline Poly qpoly_to_poly(const QPoly& p, int var) {
    std::vector<Value> cs;
    cs.reserve(p.c.size());
    for (const auto& c : p.c) cs.emplace_back(c);
    return poly_from_coeffs(var, std::move(cs));
}

// Integer roots of res_t(num - z dden, target) via random evaluation of the
// lower variables.  Candidates only; a symbolic root always survives
// evaluation, so verification keeps the result sound and complete.
inline std::vector<long> integer_candidates(const Poly& num, const Poly& dden, const Poly& target,
                                            std::uint64_t seed) {
    int var = target.var;
    if (target.deg() < 1) return {};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(-40, 40);
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<Rational> point;
        point.reserve(static_cast<std::size_t>(var));
        for (int j = 0; j < var; ++j) point.push_back(rat(pick(rng), 1 + (pick(rng) & 3)));
        auto qn = eval_coeffs(num, point);
        auto qd = eval_coeffs(dden, point);
        auto qt = eval_coeffs(target, point);
        if (!qn || !qd || !qt) continue;
        if (qt->deg() != target.deg()) continue; // unlucky: leading coefficient vanished
        int dn = std::max(num.deg(), dden.deg());
        int de = std::max(qn->deg(), qd->deg());
        if (de != dn) continue; // degree drop in the z-linear argument
        // res_t(qn - z qd, qt) over Q[z] by interpolation in z
        int bound = qt->deg(); // deg_z of the resultant is at most deg target
        std::vector<Rational> zs, vals;
        long zc = 0;
        bool bad = false;
        while (static_cast<int>(zs.size()) < bound + 1) {
            Rational z(zc++);
            UPoly<Rational> az = *qn - uscale(*qd, z);
            if (az.deg() != de) { // evaluation must keep the generic t-degree
                if (zc > 8 * (bound + 2)) { bad = true; break; }
                continue;
            }
            Value r = resultant(qpoly_to_poly(az, 0), qpoly_to_poly(*qt, 0));
            if (!r.is_rational()) throw InternalError("rational resultant expected");
            zs.push_back(z);
            vals.push_back(r.rational());
        }
        if (bad) continue;
        QPoly rz = uinterpolate(zs, vals);
        if (rz.is_zero()) continue; // all-cancelling point; retry
        std::vector<long> out;
        for (const auto& [root, mult] : rational_roots(rz)) {
            (void)mult;
            if (is_integer(root)) out.push_back(to_long(root));
        }
        return out;
    }
    throw UnsupportedCase("could not find a usable evaluation point for residue candidates");
}

} // namespace detail_ks

// gcd(num(f) - i den(f)', den(f)) = 1 for all i in Z+ (weak) resp. Z \ {0}.
inline WeakNormalization is_weakly_normalized(const Value& f, const TowerSpec& spec, int level,
                                              KernelMode mode, std::uint64_t seed = default_seed) {
    WeakNormalization out{true, 0, Value(1)};
    if (f.level() < level) return out;
    Poly num = num_at(f, level);
    Poly den = den_at(f, level);
    if (den.deg() == 0) return out;
    Poly dden = derive_poly(den, spec);
    std::vector<long> candidates = detail_ks::integer_candidates(num, dden, den, seed);
    bool have = false;
    long least = 0;
    Poly factor = poly_one(level);
    for (long m : candidates) {
        if (m == 0) continue;
        if (mode == KernelMode::weak && m <= 0) continue;
        Poly g = poly_gcd(num - scale(dden, Value(m)), den);
        if (g.deg() > 0) {
            if (!have || m < least) {
                least = m;
                factor = g;
            }
            have = true;
        }
    }
    if (have) return {false, least, value_from_poly(factor)};
    return out;
}

// Integers m for which gcd(num(f) - m den(f)', p) is nontrivial, for a
// squarefree normal multiplicity-one factor p of den(f).
inline std::vector<long> integer_lambda_candidates(const Value& f, const Poly& p, const TowerSpec& spec,
                                                   int level, std::uint64_t seed = default_seed) {
    if (f.level() < level) return {};
    Poly num = num_at(f, level);
    Poly den = den_at(f, level);
    if (den.deg() == 0 || p.deg() < 1) return {};
    Poly dden = derive_poly(den, spec);
    std::vector<long> verified;
    for (long m : detail_ks::integer_candidates(num, dden, p, seed)) {
        if (m == 0) continue;
        Poly g = poly_gcd(num - scale(dden, Value(m)), p);
        if (g.deg() > 0) verified.push_back(m);
    }
    std::sort(verified.begin(), verified.end());
    verified.erase(std::unique(verified.begin(), verified.end()), verified.end());
    return verified;
}

// Algorithm GKS.  At level >= 1 the irreducible splitting is avoided: for
// each integer candidate m, h_m = gcd(num(f) - m den(f)', g) collects exactly
// the subfactor of g that needs exponent m, and the h_m are pairwise coprime.
inline KernelShell gks(const Value& f, const TowerSpec& spec, int level, KernelMode mode,
                       std::uint64_t seed = default_seed) {
    if (level < 0) throw PreconditionViolated("gks needs a level >= 0");
    if (level == 0 && mode != KernelMode::normalized)
        throw PreconditionViolated("level-0 kernels are computed in normalized mode");
    if (f.level() < level) return {f, Value(1), mode}; // f in F: kernel f, shell 1
    Poly num = num_at(f, level);
    Poly den = den_at(f, level);
    if (den.deg() == 0) return {f, Value(1), mode};
    Poly dden = derive_poly(den, spec);
    // product of the normal irreducible factors of den with multiplicity 1
    Poly w = exact_div(den, poly_gcd(den, dden));
    Poly g = exact_div(w, poly_gcd(w, dden));
    if (g.deg() < 1) return {f, Value(1), mode};

    Value shell(1);
    Value log_deriv(0); // eta'/eta accumulated factor by factor
    auto move_factor = [&](const Poly& h, long m) {
        shell = shell * value_pow(value_from_poly(h), m);
        Value hl = normalize_fraction(derive_poly(h, spec), h);
        log_deriv = log_deriv + Value(Rational(m)) * hl;
    };

    if (level == 0) {
        // exact route: per irreducible factor, the residue is r0/r1 mod g_i
        for (const auto& qf : factor_rational_poly(detail_ks::poly_to_qpoly(g)).factors) {
            Poly gi = detail_ks::qpoly_to_poly(qf.factor, 0);
            Poly r0 = rem(num, gi);
            Poly r1 = rem(dden, gi);
            if (r1.is_zero()) continue;
            ExtendedGcd e = extended_gcd(r1, gi);
            if (e.g.deg() != 0) continue; // r1 not invertible: no residue here
            Poly lambda = rem(r0 * e.u, gi); // r0 * r1^{-1} mod gi
            if (lambda.is_zero() || lambda.deg() != 0) continue;
            const Value& lv = lambda.c[0];
            if (!lv.is_rational() || !is_integer(lv.rational())) continue;
            long m = to_long(lv.rational());
            if (m == 0) continue;
            if (mode == KernelMode::weak && m <= 0) continue;
            move_factor(gi, m);
        }
    } else {
        Poly rest = g;
        for (long m : integer_lambda_candidates(f, g, spec, level, seed)) {
            if (mode == KernelMode::weak && m <= 0) continue;
            Poly h = poly_gcd(num - scale(dden, Value(m)), rest);
            if (h.deg() < 1) continue;
            move_factor(h, m);
            rest = exact_div(rest, h);
            if (rest.deg() < 1) break;
        }
    }
    Value kernel = f - log_deriv;
    return {kernel, shell, mode};
}

} // namespace hyperred
