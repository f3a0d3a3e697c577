#pragma once

// Deciding membership in V_f = { a' + a f : a in F(t) }.
//
// After the kernel-shell reduction, g lies in V_f iff the simple part h is
// zero and the leftover r/den(f) is of the form a' + f a for a t-reduced a.
// When f lies in Q(x) and the tower below is rationally hyperexponential the
// leftover splits per Laurent power of t into scalar problems
// a_k' + (f + k sigma) a_k = w_k that recurse down the tower, bottoming out
// in the residual-form machinery over Q(x).  Other shapes are reported as
// unsupported rather than guessed.

#include <optional>

#include "hyperred/ad_rht.hpp"

namespace hyperred {

inline TowerSpec truncated_tower(const TowerSpec& spec, int level) {
    TowerSpec out;
    out.assume_regular = spec.assume_regular;
    for (int j = 1; j <= level; ++j) out.generators.push_back(spec.gen(j));
    return out;
}

// Solve a' + delta a = w for a in F_level, with delta in Q(x).
inline std::optional<Value> solve_linear_ode(const Value& delta, const Value& w,
                                             const TowerSpec& spec, int level) {
    if (delta.level() > 0)
        throw UnsupportedCase("linear solve needs a direction in Q(x)");
    if (w.is_zero()) return Value(0);
    if (level <= 0) {
        KernelShell ks = gks(delta, spec, 0, KernelMode::normalized);
        HyperexpHermite hr = reduce_against_kernel(w * ks.shell, ks.kernel);
        if (!hr.form.is_zero()) return std::nullopt;
        return hr.w * inv(ks.shell);
    }
    if (!spec.rht_up_to(level))
        throw UnsupportedCase("linear solve needs a rationally hyperexponential tower below the level");
    TowerSpec sub = truncated_tower(spec, level);
    Value acc(0);
    for (const auto& term : matryoshka_decompose(w, sub).terms) {
        Value delta_u = delta + power_product_log_derivative(term.exponents, sub);
        Value u_val = power_product_value(term.exponents, sub);
        if (term.level == 0) {
            auto a0 = solve_linear_ode(delta_u, term.coeff, sub, 0);
            if (!a0) return std::nullopt;
            acc = acc + *a0 * u_val;
            continue;
        }
        ReductionCertificate cert = gksr(delta_u, term.coeff, sub, term.level, false);
        if (!cert.r.is_zero()) throw InternalError("corollary reduction left a reduced part");
        if (!cert.h.is_zero()) return std::nullopt; // uniqueness of the simple part blocks a solution
        acc = acc + cert.a * u_val;
    }
    return acc;
}

inline bool in_vf(const Value& f, const Value& g, const TowerSpec& spec, int level) {
    if (!is_weakly_normalized(f, spec, level, KernelMode::weak).ok) throw NotWeaklyNormalized();
    ReductionCertificate cert = gksr(f, g, spec, level, false);
    if (!cert.h.is_zero()) return false;
    Value w = certificate_residue(cert);
    if (w.is_zero()) return true;
    if (level >= 1 && f.level() < level && spec.gen(level).derivative_degree_le_1 &&
        classify(g, spec, level).is_normally_proper) {
        return true; // Corollary case: membership is equivalent to h = 0
    }
    if (level < 1 || f.level() > 0 || spec.gen(level).sigma.level() > 0 || !spec.rht_up_to(level - 1))
        throw UnsupportedCase("V_f membership beyond the reduced residual needs f in Q(x) over a "
                              "rationally hyperexponential tower");
    const Value& sigma = spec.gen(level).sigma;
    for (const auto& [k, wk] : laurent_coefficients(w, level)) {
        Value delta = f + Value(Rational(k)) * sigma;
        if (!solve_linear_ode(delta, wk, spec, level - 1)) return false;
    }
    return true;
}

} // namespace hyperred
