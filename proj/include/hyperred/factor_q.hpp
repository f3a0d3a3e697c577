#pragma once

// Irreducible factorization of univariate polynomials over Q:
// squarefree split (Yun), Berlekamp over a small prime, quadratic Hensel
// lifting to a Mignotte-sized modulus, subset recombination.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "hyperred/rational.hpp"
#include "hyperred/upoly.hpp"

namespace hyperred {

using QPoly = UPoly<Rational>;

struct QFactor {
    QPoly factor; // monic irreducible over Q
    int multiplicity;
};

struct QFactorization {
    Rational unit; // p = unit * prod factor^multiplicity
    std::vector<QFactor> factors;
};

namespace zx {

using ZX = std::vector<mpz_class>; // dense, back() != 0 unless empty

inline void trim(ZX& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int deg(const ZX& p) { return static_cast<int>(p.size()) - 1; }

inline ZX mul(const ZX& a, const ZX& b) {
    if (a.empty() || b.empty()) return {};
    ZX r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline ZX sub(const ZX& a, const ZX& b) {
    ZX r = a;
    if (r.size() < b.size()) r.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline void mod_reduce(ZX& p, const mpz_class& m) {
    for (auto& c : p) {
        c %= m;
        if (c < 0) c += m;
    }
    trim(p);
}

inline ZX mulm(const ZX& a, const ZX& b, const mpz_class& m) {
    ZX r = mul(a, b);
    mod_reduce(r, m);
    return r;
}

inline ZX addm(const ZX& a, const ZX& b, const mpz_class& m) {
    ZX r = a;
    if (r.size() < b.size()) r.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    mod_reduce(r, m);
    return r;
}

inline ZX subm(const ZX& a, const ZX& b, const mpz_class& m) {
    ZX r = sub(a, b);
    mod_reduce(r, m);
    return r;
}

// division by a monic divisor, coefficients in Z/m
inline std::pair<ZX, ZX> divmod_monic(const ZX& a, const ZX& b, const mpz_class& m) {
    if (b.empty() || b.back() != 1) throw InternalError("divmod_monic requires a monic divisor");
    ZX r = a, q;
    if (deg(a) >= deg(b)) q.assign(a.size() - b.size() + 1, mpz_class(0));
    while (deg(r) >= deg(b)) {
        int k = deg(r) - deg(b);
        mpz_class c = r.back();
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            r[static_cast<std::size_t>(k) + i] -= c * b[i];
        }
        mod_reduce(r, m);
        if (deg(r) >= deg(b) + k) trim(r); // safety; mod_reduce already trims
    }
    mod_reduce(q, m);
    return {q, r};
}

// map to the symmetric residue system (-m/2, m/2]
inline ZX symmetric(const ZX& p, const mpz_class& m) {
    ZX r = p;
    mpz_class half = m / 2;
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    trim(r);
    return r;
}

inline mpz_class content(const ZX& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline bool exact_divide(const ZX& a, const ZX& b, ZX& q_out) {
    // true and q_out = a/b when b | a over Z
    if (a.empty()) { q_out.clear(); return true; }
    if (b.empty() || deg(a) < deg(b)) return false;
    ZX r = a;
    ZX q(a.size() - b.size() + 1, mpz_class(0));
    while (deg(r) >= deg(b)) {
        mpz_class c = r.back();
        if (c % b.back() != 0) return false;
        c /= b.back();
        int k = deg(r) - deg(b);
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[static_cast<std::size_t>(k) + i] -= c * b[i];
        trim(r);
    }
    if (!r.empty()) return false;
    q_out = std::move(q);
    return true;
}

} // namespace zx

namespace fp {

// dense polynomials over F_p for a small odd prime (fits in long)
using FpPoly = std::vector<long>;

inline long norm(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    return a;
}
inline long mulp(long a, long b, long p) { return static_cast<long>((static_cast<__int128>(a) * b) % p); }
inline long powp(long a, long e, long p) {
    long r = 1;
    a = norm(a, p);
    while (e > 0) {
        if (e & 1) r = mulp(r, a, p);
        a = mulp(a, a, p);
        e >>= 1;
    }
    return r;
}
inline long invp(long a, long p) { return powp(norm(a, p), p - 2, p); }

inline void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

inline FpPoly mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulp(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

inline FpPoly monic(FpPoly f, long p) {
    trim(f);
    if (f.empty() || f.back() == 1) return f;
    long li = invp(f.back(), p);
    for (auto& c : f) c = mulp(c, li, p);
    return f;
}

inline std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly r = a, q;
    trim(r);
    if (b.empty()) throw ZeroDenominator("F_p division by zero");
    long li = invp(b.back(), p);
    if (deg(r) >= deg(b)) q.assign(r.size() - b.size() + 1, 0);
    while (deg(r) >= deg(b)) {
        int k = deg(r) - deg(b);
        long c = mulp(r.back(), li, p);
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[static_cast<std::size_t>(k) + i] = norm(r[static_cast<std::size_t>(k) + i] - mulp(c, b[i], p), p);
        trim(r);
    }
    return {q, r};
}

inline FpPoly gcd(FpPoly a, FpPoly b, long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

inline FpPoly deriv(const FpPoly& f, long p) {
    FpPoly r;
    for (int k = 1; k <= deg(f); ++k) r.push_back(mulp(k % p, f[static_cast<std::size_t>(k)], p));
    trim(r);
    return r;
}

inline FpPoly powmod(FpPoly base, mpz_class e, const FpPoly& f, long p) {
    FpPoly r{1};
    base = divmod(base, f, p).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = divmod(mul(r, base, p), f, p).second;
        base = divmod(mul(base, base, p), f, p).second;
        e >>= 1;
    }
    return r;
}

// Berlekamp factorization of a monic squarefree f over F_p.
inline std::vector<FpPoly> berlekamp(const FpPoly& f, long p) {
    int n = deg(f);
    if (n <= 1) return {f};
    // rows of the Frobenius matrix: x^(i*p) mod f
    std::vector<FpPoly> rows;
    FpPoly xp = powmod(FpPoly{0, 1}, mpz_class(p), f, p);
    FpPoly cur{1};
    for (int i = 0; i < n; ++i) {
        rows.push_back(cur);
        cur = divmod(mul(cur, xp, p), f, p).second;
    }
    // Q - I, transposed into column-major Gaussian elimination for the nullspace
    std::vector<std::vector<long>> m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        const FpPoly& row = rows[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            long v = j <= deg(row) ? row[static_cast<std::size_t>(j)] : 0;
            if (i == j) v = norm(v - 1, p);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v; // row i = image of x^i
        }
    }
    // nullspace of (Q - I)^T acting on coefficient vectors v: v*(Q-I) = 0
    // i.e. solve m^T * v = 0; eliminate on m^T.
    std::vector<std::vector<long>> a(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    std::vector<int> pivot_col(static_cast<std::size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int r = rank; r < n; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(a[static_cast<std::size_t>(sel)], a[static_cast<std::size_t>(rank)]);
        long piv = invp(a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] = mulp(a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)], piv, p);
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            long c = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (!c) continue;
            for (int j = 0; j < n; ++j)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = norm(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] - mulp(c, a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)], p), p);
        }
        pivot_col[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }
    std::vector<FpPoly> basis;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[static_cast<std::size_t>(col)]) continue;
        FpPoly v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int r = 0; r < rank; ++r)
            v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = norm(-a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)], p);
        trim(v);
        basis.push_back(std::move(v));
    }
    std::size_t r_factors = basis.size();
    std::vector<FpPoly> factors{monic(f, p)};
    if (r_factors <= 1) return factors;
    for (const auto& v : basis) {
        if (deg(v) <= 0) continue; // the constant vector splits nothing
        for (long c = 0; c < p && factors.size() < r_factors; ++c) {
            FpPoly shifted = v;
            if (shifted.empty()) shifted.push_back(0);
            shifted[0] = norm(shifted[0] - c, p);
            trim(shifted);
            std::vector<FpPoly> next;
            for (const auto& w : factors) {
                if (deg(w) <= 1) { next.push_back(w); continue; }
                FpPoly g = gcd(w, shifted, p);
                if (deg(g) > 0 && deg(g) < deg(w)) {
                    next.push_back(g);
                    next.push_back(divmod(w, g, p).first);
                } else {
                    next.push_back(w);
                }
            }
            factors = std::move(next);
        }
        if (factors.size() >= r_factors) break;
    }
    for (auto& g : factors) g = monic(g, p);
    return factors;
}

} // namespace fp

namespace detail_factor {

struct HenselNode {
    zx::ZX g, h; // node product = g*h (monic, mod current modulus)
    zx::ZX s, t; // s*g + t*h = 1
    int left = -1, right = -1;
    int leaf = -1; // index into the leaf list when this node is a single factor
};

inline zx::ZX from_fp(const fp::FpPoly& f) {
    zx::ZX r;
    for (long c : f) r.emplace_back(c);
    zx::trim(r);
    return r;
}

// builds the balanced product tree over factors[lo, hi); returns node index or
// a pseudo-node when the range is a single leaf
inline int build_tree(std::vector<HenselNode>& nodes, const std::vector<fp::FpPoly>& leaves,
                      int lo, int hi, long p, zx::ZX& product_out) {
    if (hi - lo == 1) {
        product_out = from_fp(leaves[static_cast<std::size_t>(lo)]);
        return -(lo + 1); // negative encodes leaf index lo
    }
    int mid = (lo + hi) / 2;
    zx::ZX left_prod, right_prod;
    int li = build_tree(nodes, leaves, lo, mid, p, left_prod);
    int ri = build_tree(nodes, leaves, mid, hi, p, right_prod);
    HenselNode node;
    node.g = left_prod;
    node.h = right_prod;
    node.left = li;
    node.right = ri;
    // Bezout data mod p
    fp::FpPoly gl, hl;
    gl.reserve(node.g.size());
    for (const auto& c : node.g) gl.push_back(fp::norm(c.get_si(), p));
    for (const auto& c : node.h) hl.push_back(fp::norm(c.get_si(), p));
    // extended Euclid over F_p
    fp::FpPoly r0 = gl, r1 = hl, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = fp::divmod(r0, r1, p);
        fp::FpPoly s2 = s0, t2 = t0;
        {
            fp::FpPoly qs = fp::mul(q, s1, p);
            if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
            for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = fp::norm(s2[i] - qs[i], p);
            fp::trim(s2);
            fp::FpPoly qt = fp::mul(q, t1, p);
            if (t2.size() < qt.size()) t2.resize(qt.size(), 0);
            for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = fp::norm(t2[i] - qt[i], p);
            fp::trim(t2);
        }
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (fp::deg(r0) != 0) throw InternalError("Hensel tree factors not coprime mod p");
    long ri0 = fp::invp(r0[0], p);
    for (auto& c : s0) c = fp::mulp(c, ri0, p);
    for (auto& c : t0) c = fp::mulp(c, ri0, p);
    node.s = from_fp(s0);
    node.t = from_fp(t0);
    product_out = zx::mulm(node.g, node.h, mpz_class(p));
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
}

// one quadratic lifting step m -> m^2 for the subtree rooted at idx,
// given the node's product f (monic mod m2)
inline void lift_node(std::vector<HenselNode>& nodes, std::vector<zx::ZX>& leaf_values, int idx,
                      const zx::ZX& f, const mpz_class& m2) {
    if (idx < 0) {
        leaf_values[static_cast<std::size_t>(-idx - 1)] = f;
        return;
    }
    HenselNode& nd = nodes[static_cast<std::size_t>(idx)];
    zx::ZX e = zx::subm(f, zx::mulm(nd.g, nd.h, m2), m2);
    auto [q, r] = zx::divmod_monic(zx::mulm(nd.s, e, m2), nd.h, m2);
    zx::ZX gstar = zx::addm(zx::addm(nd.g, zx::mulm(nd.t, e, m2), m2), zx::mulm(q, nd.g, m2), m2);
    zx::ZX hstar = zx::addm(nd.h, r, m2);
    zx::ZX one{mpz_class(1)};
    zx::ZX b = zx::subm(zx::addm(zx::mulm(nd.s, gstar, m2), zx::mulm(nd.t, hstar, m2), m2), one, m2);
    auto [c, d] = zx::divmod_monic(zx::mulm(nd.s, b, m2), hstar, m2);
    zx::ZX sstar = zx::subm(nd.s, d, m2);
    zx::ZX tstar = zx::subm(zx::subm(nd.t, zx::mulm(nd.t, b, m2), m2), zx::mulm(c, gstar, m2), m2);
    nd.g = std::move(gstar);
    nd.h = std::move(hstar);
    nd.s = std::move(sstar);
    nd.t = std::move(tstar);
    lift_node(nodes, leaf_values, nd.left, nd.g, m2);
    lift_node(nodes, leaf_values, nd.right, nd.h, m2);
}

inline mpz_class mignotte_bound(const zx::ZX& f) {
    mpz_class norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    mpz_class s = sqrt(norm2) + 1;
    mpz_class b = s * abs(f.back());
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(zx::deg(f) + 1));
    return b * two_n;
}

// factor a primitive squarefree polynomial over Z, deg >= 1
inline std::vector<zx::ZX> factor_squarefree_z(zx::ZX f) {
    if (zx::deg(f) == 1) return {f};
    static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                  59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
    long p = 0;
    fp::FpPoly fbar;
    for (long cand : primes) {
        if (f.back() % cand == 0) continue;
        fp::FpPoly g;
        for (const auto& c : f) {
            mpz_class red = c % cand;
            if (red < 0) red += cand;
            g.push_back(red.get_si());
        }
        fp::trim(g);
        if (fp::deg(g) != zx::deg(f)) continue;
        fp::FpPoly gp = fp::deriv(g, cand);
        if (fp::deg(fp::gcd(g, gp, cand)) == 0) {
            p = cand;
            fbar = fp::monic(g, cand);
            break;
        }
    }
    if (p == 0) throw InternalError("no usable prime for factorization");
    std::vector<fp::FpPoly> modular = fp::berlekamp(fbar, p);
    if (modular.size() == 1) return {f};
    std::sort(modular.begin(), modular.end(),
              [](const fp::FpPoly& a, const fp::FpPoly& b) { return a.size() < b.size(); });

    // lift to m > 2 * bound
    mpz_class bound = mignotte_bound(f);
    mpz_class m(p);
    std::vector<HenselNode> nodes;
    std::vector<zx::ZX> leaf_values(modular.size());
    zx::ZX root_prod;
    int root = build_tree(nodes, modular, 0, static_cast<int>(modular.size()), p, root_prod);
    while (m <= 2 * bound) {
        mpz_class m2 = m * m;
        mpz_class lc_inv;
        mpz_class lcf = f.back() % m2;
        if (lcf < 0) lcf += m2;
        if (mpz_invert(lc_inv.get_mpz_t(), lcf.get_mpz_t(), m2.get_mpz_t()) == 0)
            throw InternalError("leading coefficient not invertible in Hensel lift");
        zx::ZX fmonic = f;
        for (auto& c : fmonic) c *= lc_inv;
        zx::mod_reduce(fmonic, m2);
        lift_node(nodes, leaf_values, root, fmonic, m2);
        m = m2;
    }
    if (nodes.empty() && leaf_values.size() == 1) leaf_values[0] = f; // single factor edge

    // subset recombination
    std::vector<zx::ZX> result;
    std::vector<zx::ZX> pool = leaf_values;
    zx::ZX rest = f;
    std::size_t take = 1;
    while (2 * take <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(take);
        for (std::size_t i = 0; i < take; ++i) idx[i] = i;
        while (true) {
            zx::ZX candidate{rest.back()};
            for (std::size_t i : idx) candidate = zx::mulm(candidate, pool[i], m);
            candidate = zx::symmetric(candidate, m);
            mpz_class ct = zx::content(candidate);
            if (ct > 1)
                for (auto& c : candidate) c /= ct;
            zx::ZX q;
            if (!candidate.empty() && zx::exact_divide(rest, candidate, q)) {
                if (candidate.back() < 0)
                    for (auto& c : candidate) c = -c;
                result.push_back(candidate);
                mpz_class cq = zx::content(q);
                if (cq > 1)
                    for (auto& c : q) c /= cq;
                rest = q;
                std::vector<zx::ZX> np;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
                pool = std::move(np);
                found = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == pool.size() - take + static_cast<std::size_t>(pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++take;
    }
    if (zx::deg(rest) >= 1) result.push_back(rest);
    return result;
}

} // namespace detail_factor

// Factorization into monic irreducible factors over Q.
inline QFactorization factor_rational_poly(const QPoly& input) {
    if (input.is_zero()) throw PreconditionViolated("factorization of zero");
    QFactorization out{input.lc(), {}};
    QPoly p = umonic(input);
    if (p.deg() == 0) return out;

    // squarefree split over Q
    std::vector<std::pair<QPoly, int>> squarefree;
    {
        QPoly a = p;
        QPoly g = ugcd(a, uderiv(a));
        if (g.deg() == 0) {
            squarefree.emplace_back(a, 1);
        } else {
            QPoly c = uquo(a, g);
            QPoly d = uquo(uderiv(a), g) - uderiv(c);
            int i = 1;
            while (c.deg() > 0) {
                QPoly f = ugcd(c, d);
                if (f.deg() > 0) squarefree.emplace_back(f, i);
                c = uquo(c, f);
                d = uquo(d, f) - uderiv(c);
                ++i;
            }
        }
    }

    for (auto& [sq, mult] : squarefree) {
        // to primitive integer form
        mpz_class den_lcm = 1;
        for (const auto& c : sq.c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        zx::ZX z;
        for (const auto& c : sq.c) {
            Rational scaled = c * Rational(den_lcm);
            z.push_back(scaled.get_num());
        }
        zx::trim(z);
        mpz_class ct = zx::content(z);
        if (ct > 1)
            for (auto& c : z) c /= ct;
        for (const auto& factor_z : detail_factor::factor_squarefree_z(z)) {
            QPoly f;
            for (const auto& c : factor_z) f.c.emplace_back(c);
            f.trim();
            out.factors.push_back({umonic(f), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const QFactor& a, const QFactor& b) {
        if (a.factor.deg() != b.factor.deg()) return a.factor.deg() < b.factor.deg();
        for (int i = a.factor.deg(); i >= 0; --i) {
            const Rational& ca = a.factor.c[static_cast<std::size_t>(i)];
            const Rational& cb = b.factor.c[static_cast<std::size_t>(i)];
            if (ca != cb) return ca < cb;
        }
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

// All rational roots of p with multiplicities.
inline std::vector<std::pair<Rational, int>> rational_roots(const QPoly& p) {
    std::vector<std::pair<Rational, int>> roots;
    for (const auto& f : factor_rational_poly(p).factors)
        if (f.factor.deg() == 1) roots.emplace_back(-f.factor.c[0], f.multiplicity);
    return roots;
}

} // namespace hyperred
