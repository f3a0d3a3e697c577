#pragma once

// Additive decomposition in a rationally hyperexponential tower:
// f = derive(g) + r with r in the canonical remainder space R, so r = 0
// exactly when f is a derivative in the tower.

#include <map>
#include <optional>
#include <vector>

#include "hyperred/cx_reduction.hpp"
#include "hyperred/matryoshka.hpp"
#include "hyperred/reductions.hpp"

namespace hyperred {

struct RemainderTerm {
    int level;                  // Matryoshka level of the term
    std::vector<int> exponents; // the power product T
    Value coeff;                // multiplier of T: t_i-simple (level >= 1), x-simple (level 0,
                                // T = 1), or (v + q/den(xi)) / eta for level 0 with T != 1
    std::optional<ResidualForm> residual; // level-0, T != 1 structure
    Value eta = Value(1);
};

struct AdditiveDecomposition {
    int depth = 0;
    Value g;
    Value remainder; // sum of coeff * T over all terms
    std::vector<RemainderTerm> terms;

    bool remainder_is_zero() const { return terms.empty(); }
};

inline bool same_remainder(const AdditiveDecomposition& a, const AdditiveDecomposition& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const RemainderTerm& x = a.terms[i];
        const RemainderTerm& y = b.terms[i];
        if (x.level != y.level || x.exponents != y.exponents || !(x.coeff == y.coeff)) return false;
    }
    return true;
}

inline AdditiveDecomposition ad_rht(const Value& f, const TowerSpec& spec) {
    if (!spec.is_rht())
        throw UnsupportedTower("additive decomposition needs a rationally hyperexponential tower");
    AdditiveDecomposition out{spec.depth(), Value(0), Value(0), {}};
    if (f.is_zero()) return out;

    MatryoshkaDecomposition parts = matryoshka_decompose(f, spec);
    std::map<std::vector<int>, KernelShell> kernel_memo;

    for (const auto& term : parts.terms) {
        Value t_val = power_product_value(term.exponents, spec);
        if (term.level >= 1) {
            // direction T'/T lies in Q(x), so the Corollary fast path applies
            Value delta = power_product_log_derivative(term.exponents, spec);
            ReductionCertificate cert = gksr(delta, term.coeff, spec, term.level, false);
            if (!cert.r.is_zero())
                throw InternalError("corollary reduction left a nonzero reduced part");
            out.g = out.g + cert.a * t_val;
            if (!cert.h.is_zero())
                out.terms.push_back({term.level, term.exponents, cert.h, std::nullopt, Value(1)});
            continue;
        }
        bool t_is_one = true;
        for (int e : term.exponents)
            if (e != 0) t_is_one = false;
        if (t_is_one) {
            HermiteResult hr = hermite_ostrogradsky(term.coeff);
            out.g = out.g + hr.u;
            if (!hr.v.is_zero())
                out.terms.push_back({0, term.exponents, hr.v, std::nullopt, Value(1)});
            continue;
        }
        Value omega = power_product_log_derivative(term.exponents, spec);
        if (omega.is_zero())
            throw UnsupportedTower("generators are multiplicatively dependent: T'/T = 0 for T != 1");
        auto memo = kernel_memo.find(term.exponents);
        if (memo == kernel_memo.end()) {
            memo = kernel_memo.emplace(term.exponents,
                                       gks(omega, spec, 0, KernelMode::normalized)).first;
        }
        const KernelShell& ks = memo->second;
        HyperexpHermite hr = reduce_against_kernel(term.coeff * ks.shell, ks.kernel);
        Value eta_inv = inv(ks.shell);
        out.g = out.g + hr.w * eta_inv * t_val;
        if (!hr.form.is_zero()) {
            Value coeff = hr.form.combined() * eta_inv;
            out.terms.push_back({0, term.exponents, coeff, hr.form, ks.shell});
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const RemainderTerm& a, const RemainderTerm& b) {
        if (a.level != b.level) return a.level < b.level;
        return a.exponents < b.exponents;
    });
    for (const auto& term : out.terms)
        out.remainder = out.remainder + term.coeff * power_product_value(term.exponents, spec);
    return out;
}

inline bool is_derivative(const Value& f, const TowerSpec& spec) {
    return ad_rht(f, spec).remainder_is_zero();
}

} // namespace hyperred
