#pragma once

// Laurent-Matryoshka decomposition: F_n = L_0 + L_1 + ... + L_n (direct),
// where L_i collects normally t_i-proper coefficients times power products
// of t_{i+1}, ..., t_n, and L_0 the Laurent polynomials over Q(x).

#include <algorithm>
#include <vector>

#include "hyperred/tower.hpp"

namespace hyperred {

struct MatryoshkaTerm {
    int level;                  // i: the coefficient lives in F_i
    std::vector<int> exponents; // exponents[j-1] is the power of t_j; zero for j <= level
    Value coeff;                // in Q(x) for level 0, normally t_i-proper otherwise
};

struct MatryoshkaDecomposition {
    int depth = 0;
    std::vector<MatryoshkaTerm> terms;
};

inline Value power_product_value(const std::vector<int>& exponents, const TowerSpec& spec) {
    Value t(1);
    for (int j = 1; j <= spec.depth(); ++j) {
        int e = exponents[static_cast<std::size_t>(j - 1)];
        if (e != 0) t = t * value_pow(value_from_poly(poly_var(j)), e);
    }
    return t;
}

// T'/T = sum of exponents times logarithmic derivatives; in Q(x) for a
// rationally hyperexponential tower
inline Value power_product_log_derivative(const std::vector<int>& exponents, const TowerSpec& spec) {
    Value s(0);
    for (int j = 1; j <= spec.depth(); ++j) {
        int e = exponents[static_cast<std::size_t>(j - 1)];
        if (e != 0) s = s + Value(Rational(e)) * spec.gen(j).sigma;
    }
    return s;
}

namespace detail_matry {

inline void decompose_worker(const Value& c, int lvl, std::vector<int>& expo,
                             std::vector<MatryoshkaTerm>& out) {
    if (lvl == 0) {
        if (!c.is_zero()) out.push_back({0, expo, c});
        return;
    }
    ProperSplit ps = proper_split(c, lvl);
    if (!ps.proper.is_zero()) out.push_back({lvl, expo, ps.proper});
    for (const auto& [k, ck] : laurent_coefficients(ps.laurent, lvl)) {
        expo[static_cast<std::size_t>(lvl - 1)] = k;
        decompose_worker(ck, lvl - 1, expo, out);
        expo[static_cast<std::size_t>(lvl - 1)] = 0;
    }
}

inline bool term_order(const MatryoshkaTerm& a, const MatryoshkaTerm& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.exponents < b.exponents;
}

} // namespace detail_matry

inline MatryoshkaDecomposition matryoshka_decompose(const Value& f, const TowerSpec& spec) {
    if (!spec.is_rht())
        throw UnsupportedTower("Matryoshka decomposition needs a rationally hyperexponential tower");
    MatryoshkaDecomposition out{spec.depth(), {}};
    if (f.is_zero()) return out;
    std::vector<int> expo(static_cast<std::size_t>(spec.depth()), 0);
    detail_matry::decompose_worker(f, spec.depth(), expo, out.terms);
    std::sort(out.terms.begin(), out.terms.end(), detail_matry::term_order);
    return out;
}

inline Value matryoshka_recombine(const MatryoshkaDecomposition& d, const TowerSpec& spec) {
    Value s(0);
    for (const auto& term : d.terms) s = s + term.coeff * power_product_value(term.exponents, spec);
    return s;
}

// pi_i(f)
inline Value project(const Value& f, int i, const TowerSpec& spec) {
    if (i < 0 || i > spec.depth()) throw PreconditionViolated("projection index out of range");
    MatryoshkaDecomposition d = matryoshka_decompose(f, spec);
    Value s(0);
    for (const auto& term : d.terms)
        if (term.level == i) s = s + term.coeff * power_product_value(term.exponents, spec);
    return s;
}

} // namespace hyperred
