#pragma once

// Minimal dense univariate polynomials over any exact field-like type K
// (needs K(0), K(1), + - * /, ==).  Used for polynomials in a formal
// constant z over a tower field and for Q[z] utility work.

#include <utility>
#include <vector>

#include "hyperred/errors.hpp"

namespace hyperred {

template <typename K>
struct UPoly {
    std::vector<K> c; // c.back() != 0; empty <=> zero

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }

    static UPoly zero() { return {}; }
    static UPoly constant(K v) {
        UPoly p;
        if (!(v == K(0))) p.c.push_back(std::move(v));
        return p;
    }
    static UPoly variable() { return UPoly{{K(0), K(1)}}; }

    K coeff(int k) const {
        if (k < 0 || k > deg()) return K(0);
        return c[static_cast<std::size_t>(k)];
    }
    const K& lc() const {
        if (is_zero()) throw InternalError("leading coefficient of zero");
        return c.back();
    }
};

template <typename K>
UPoly<K> operator+(const UPoly<K>& a, const UPoly<K>& b) {
    UPoly<K> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
        if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
    }
    r.trim();
    return r;
}

template <typename K>
UPoly<K> operator-(const UPoly<K>& a) {
    UPoly<K> r = a;
    for (auto& v : r.c) v = K(0) - v;
    return r;
}

template <typename K>
UPoly<K> operator-(const UPoly<K>& a, const UPoly<K>& b) { return a + (-b); }

template <typename K>
UPoly<K> operator*(const UPoly<K>& a, const UPoly<K>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UPoly<K> r;
    r.c.assign(a.c.size() + b.c.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
}

template <typename K>
UPoly<K> uscale(const UPoly<K>& a, const K& s) {
    if (s == K(0)) return {};
    UPoly<K> r = a;
    for (auto& v : r.c) v = v * s;
    r.trim();
    return r;
}

template <typename K>
bool operator==(const UPoly<K>& a, const UPoly<K>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}

template <typename K>
std::pair<UPoly<K>, UPoly<K>> udivmod(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero()) throw ZeroDenominator("UPoly division by zero");
    UPoly<K> q, r = a;
    q.c.assign(a.c.size(), K(0));
    const K li = K(1) / b.lc();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        K cq = r.lc() * li;
        q.c[static_cast<std::size_t>(k)] = cq;
        for (int i = 0; i <= b.deg(); ++i) {
            auto idx = static_cast<std::size_t>(i + k);
            r.c[idx] = r.c[idx] - cq * b.c[static_cast<std::size_t>(i)];
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <typename K>
UPoly<K> urem(const UPoly<K>& a, const UPoly<K>& b) { return udivmod(a, b).second; }

template <typename K>
UPoly<K> uquo(const UPoly<K>& a, const UPoly<K>& b) { return udivmod(a, b).first; }

template <typename K>
UPoly<K> umonic(const UPoly<K>& p) {
    if (p.is_zero() || p.lc() == K(1)) return p;
    K li = K(1) / p.lc(); // materialized: K may use expression templates
    return uscale(p, li);
}

template <typename K>
UPoly<K> ugcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        UPoly<K> r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(a);
}

template <typename K>
struct UExtGcd {
    UPoly<K> g, u, v; // u*a + v*b = g, g monic
};

template <typename K>
UExtGcd<K> uextgcd(const UPoly<K>& a, const UPoly<K>& b) {
    UPoly<K> r0 = a, r1 = b;
    UPoly<K> u0 = UPoly<K>::constant(K(1)), u1;
    UPoly<K> v0, v1 = UPoly<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r2] = udivmod(r0, r1);
        UPoly<K> u2 = u0 - q * u1;
        UPoly<K> v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    K li = K(1) / r0.lc();
    return {uscale(r0, li), uscale(u0, li), uscale(v0, li)};
}

template <typename K>
UPoly<K> uderiv(const UPoly<K>& p) {
    UPoly<K> r;
    for (int k = 1; k <= p.deg(); ++k) {
        K m = K(0);
        for (int i = 0; i < k; ++i) m = m + K(1); // small k; avoids an int->K requirement
        r.c.push_back(m * p.c[static_cast<std::size_t>(k)]);
    }
    r.trim();
    return r;
}

template <typename K>
K ueval(const UPoly<K>& p, const K& at) {
    K r = K(0);
    for (int k = p.deg(); k >= 0; --k) r = r * at + p.c[static_cast<std::size_t>(k)];
    return r;
}

// Lagrange interpolation through (points[i], values[i]).
template <typename K>
UPoly<K> uinterpolate(const std::vector<K>& points, const std::vector<K>& values) {
    if (points.size() != values.size()) throw InternalError("interpolation arity mismatch");
    UPoly<K> acc; // Newton form accumulation
    UPoly<K> basis = UPoly<K>::constant(K(1));
    std::vector<K> divided = values;
    // divided differences
    for (std::size_t j = 1; j < points.size(); ++j)
        for (std::size_t i = points.size() - 1; i >= j; --i)
            divided[i] = (divided[i] - divided[i - 1]) / (points[i] - points[i - j]);
    for (std::size_t i = 0; i < points.size(); ++i) {
        acc = acc + uscale(basis, divided[i]);
        UPoly<K> lin{{K(0) - points[i], K(1)}};
        basis = basis * lin;
    }
    return acc;
}

} // namespace hyperred
