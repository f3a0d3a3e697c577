#pragma once

// Formal algebraic numbers: arithmetic in F[alpha]/(m(alpha)) for a monic
// irreducible m over Q and a tower field F.  No numeric embedding is chosen;
// sums over all roots are evaluated through power sums of m.

#include <vector>

#include "hyperred/factor_q.hpp"
#include "hyperred/tower.hpp"
#include "hyperred/upoly.hpp"

namespace hyperred {

// alpha-polynomials with tower-element coefficients
using AlgRep = UPoly<Value>;

struct AlgebraicExtension {
    QPoly modulus;                    // monic irreducible over Q
    AlgRep modulus_lifted;            // the same with Value coefficients
    std::vector<Rational> power_sums; // p_k = sum of alpha^k over the roots, k < deg

    explicit AlgebraicExtension(QPoly m) : modulus(std::move(m)) {
        if (modulus.deg() < 1) throw PreconditionViolated("defining polynomial must be nonconstant");
        if (!(modulus.lc() == Rational(1))) throw PreconditionViolated("defining polynomial must be monic");
        for (const auto& c : modulus.c) modulus_lifted.c.emplace_back(c);
        int d = modulus.deg();
        // Newton's identities: p_k = e1 p_{k-1} - e2 p_{k-2} + ... + (-1)^{k-1} k e_k
        auto e = [&](int j) {
            Rational cj = modulus.coeff(d - j);
            return (j % 2 == 0) ? cj : -cj;
        };
        power_sums.assign(static_cast<std::size_t>(d), Rational(0));
        power_sums[0] = Rational(d);
        for (int k = 1; k < d; ++k) {
            Rational pk = 0;
            for (int i = 1; i < k; ++i) {
                Rational term = e(i) * power_sums[static_cast<std::size_t>(k - i)];
                pk += (i % 2 == 1) ? term : -term;
            }
            Rational last = Rational(k) * e(k);
            pk += (k % 2 == 1) ? last : -last;
            power_sums[static_cast<std::size_t>(k)] = pk;
        }
    }

    int degree() const { return modulus.deg(); }
};

inline AlgRep alg_reduce(const AlgebraicExtension& ext, const AlgRep& a) {
    if (a.deg() < ext.degree()) return a;
    return urem(a, ext.modulus_lifted);
}

inline AlgRep alg_alpha() { return AlgRep{{Value(0), Value(1)}}; }
inline AlgRep alg_const(Value v) { return AlgRep::constant(std::move(v)); }

inline AlgRep alg_mul(const AlgebraicExtension& ext, const AlgRep& a, const AlgRep& b) {
    return alg_reduce(ext, a * b);
}

inline AlgRep alg_inv(const AlgebraicExtension& ext, const AlgRep& a) {
    AlgRep ar = alg_reduce(ext, a);
    if (ar.is_zero()) throw ZeroDenominator("inverse of zero in the extension");
    auto e = uextgcd(ar, ext.modulus_lifted);
    if (e.g.deg() != 0)
        throw InternalError("defining polynomial not irreducible over the tower");
    return alg_reduce(ext, e.u);
}

// sum of a(alpha) over all roots alpha of the modulus
inline Value alg_trace_sum(const AlgebraicExtension& ext, const AlgRep& a) {
    AlgRep r = alg_reduce(ext, a);
    Value s(0);
    for (int k = 0; k <= r.deg(); ++k)
        s = s + r.coeff(k) * Value(ext.power_sums[static_cast<std::size_t>(k)]);
    return s;
}

// derivative of an algebraic-coefficient value: alpha is a constant
inline AlgRep alg_derive(const AlgRep& a, const TowerSpec& spec) {
    AlgRep out;
    out.c.reserve(a.c.size());
    for (const auto& c : a.c) out.c.push_back(derive(c, spec));
    out.trim();
    return out;
}

// ---- polynomials in a tower variable over the extension -------------------------

// dense in the tower variable; each coefficient is an alpha-polynomial
struct AlgPoly {
    int var = 0;
    std::vector<AlgRep> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

inline AlgPoly algp_lift(const Poly& p) {
    AlgPoly out{p.var, {}};
    out.c.reserve(p.c.size());
    for (const auto& v : p.c) out.c.push_back(alg_const(v));
    out.trim();
    return out;
}

inline AlgPoly algp_scale(const AlgebraicExtension& ext, const AlgPoly& p, const AlgRep& s) {
    AlgPoly out{p.var, {}};
    out.c.reserve(p.c.size());
    for (const auto& v : p.c) out.c.push_back(alg_mul(ext, v, s));
    out.trim();
    return out;
}

inline AlgPoly algp_sub(const AlgPoly& a, const AlgPoly& b) {
    AlgPoly out = a;
    if (out.c.size() < b.c.size()) out.c.resize(b.c.size());
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = out.c[i] - b.c[i];
    out.trim();
    return out;
}

inline std::pair<AlgPoly, AlgPoly> algp_divmod(const AlgebraicExtension& ext, const AlgPoly& a,
                                               const AlgPoly& b) {
    if (b.is_zero()) throw ZeroDenominator("AlgPoly division by zero");
    AlgPoly q{a.var, {}}, r = a;
    AlgRep li = alg_inv(ext, b.c.back());
    if (a.deg() >= b.deg()) q.c.assign(a.c.size() - b.c.size() + 1, AlgRep{});
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        AlgRep cq = alg_mul(ext, r.c.back(), li);
        q.c[static_cast<std::size_t>(k)] = cq;
        for (int i = 0; i <= b.deg(); ++i) {
            auto idx = static_cast<std::size_t>(i + k);
            r.c[idx] = r.c[idx] - alg_mul(ext, cq, b.c[static_cast<std::size_t>(i)]);
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

inline AlgPoly algp_monic(const AlgebraicExtension& ext, const AlgPoly& p) {
    if (p.is_zero()) return p;
    return algp_scale(ext, p, alg_inv(ext, p.c.back()));
}

inline AlgPoly algp_gcd(const AlgebraicExtension& ext, AlgPoly a, AlgPoly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        AlgPoly r = algp_divmod(ext, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return algp_monic(ext, a);
}

// view an AlgPoly as an element of F(alpha): alpha-major representation with
// tower-element coefficients
inline AlgRep algp_transpose(const AlgPoly& p) {
    AlgRep out;
    for (int k = 0; k <= p.deg(); ++k) {
        const AlgRep& ak = p.c[static_cast<std::size_t>(k)];
        for (int j = 0; j <= ak.deg(); ++j) {
            while (out.deg() < j) out.c.push_back(Value(0));
            out.c[static_cast<std::size_t>(j)] =
                out.c[static_cast<std::size_t>(j)] +
                ak.coeff(j) * value_from_poly(poly_monomial(p.var, Value(1), k));
        }
    }
    out.trim();
    return out;
}

} // namespace hyperred
