#pragma once

// Exact arithmetic kernel for elements of a tower Q(x)(t1,...,tn).
//
// Variables are indexed 0 = x, i >= 1 = t_i.  A Value is either a Rational
// (an element of Q) or a reduced fraction num/den of polynomials in its top
// variable; coefficients of a polynomial in variable v live strictly below v.
// Values are immutable and always canonical: fractions are coprime, the
// denominator is monic, and an element that lies in a smaller field is stored
// at that smaller level.  Equality is therefore structural.

#include <cstdlib>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "hyperred/errors.hpp"
#include "hyperred/rational.hpp"
#include "hyperred/upoly.hpp"

namespace hyperred {

// Safety bound on intermediate polynomial degrees (env HYPERRED_MAX_DEGREE).
inline int max_degree_limit() {
    static const int limit = [] {
        if (const char* s = std::getenv("HYPERRED_MAX_DEGREE")) {
            int v = std::atoi(s);
            if (v > 0) return v;
        }
        return 512;
    }();
    return limit;
}

inline void check_degree(int d) {
    if (d > max_degree_limit())
        throw MaxDegreeExceeded("intermediate degree " + std::to_string(d) +
                                " exceeds HYPERRED_MAX_DEGREE=" + std::to_string(max_degree_limit()));
}

struct Frac;

class Value {
public:
    Value() : v_(Rational(0)) {}
    Value(int n) : v_(Rational(n)) {}
    Value(long n) : v_(Rational(n)) {}
    Value(Rational r) : v_(std::move(r)) {}
    explicit Value(std::shared_ptr<const Frac> f) : v_(std::move(f)) {}

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const Frac& frac() const { return *std::get<std::shared_ptr<const Frac>>(v_); }

    // -1 for rationals; the top variable index otherwise.  level(f) <= i
    // means f lies in F_i (with F_{-1} = Q).
    int level() const;

    bool is_zero() const { return is_rational() && rational() == 0; }
    bool is_one() const { return is_rational() && rational() == 1; }

private:
    std::variant<Rational, std::shared_ptr<const Frac>> v_;
};

// Dense polynomial in variable `var` over the field one level down.
struct Poly {
    int var = 0;
    std::vector<Value> c; // c.back() != 0; empty <=> zero polynomial

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
};

struct Frac {
    int var;
    Poly num;
    Poly den;
};

inline int Value::level() const {
    return is_rational() ? -1 : frac().var;
}

// ---- polynomial construction ------------------------------------------------

inline void poly_trim(Poly& p) {
    while (!p.c.empty() && p.c.back().is_zero()) p.c.pop_back();
}

inline Poly poly_zero(int var) { return Poly{var, {}}; }

inline Poly poly_const(int var, Value v) {
    if (v.level() >= var) throw InternalError("coefficient level not below variable");
    Poly p{var, {}};
    if (!v.is_zero()) p.c.push_back(std::move(v));
    return p;
}

inline Poly poly_one(int var) { return poly_const(var, Value(1)); }

inline Poly poly_monomial(int var, Value v, int k) {
    if (v.level() >= var) throw InternalError("coefficient level not below variable");
    Poly p{var, {}};
    if (!v.is_zero()) {
        check_degree(k);
        p.c.assign(static_cast<std::size_t>(k) + 1, Value(0));
        p.c.back() = std::move(v);
    }
    return p;
}

inline Poly poly_var(int var) { return poly_monomial(var, Value(1), 1); }

inline Poly poly_from_coeffs(int var, std::vector<Value> cs) {
    Poly p{var, std::move(cs)};
    poly_trim(p);
    for (const auto& v : p.c)
        if (v.level() >= var) throw InternalError("coefficient level not below variable");
    return p;
}

inline const Value& coeff(const Poly& p, int k) {
    static const Value zero(0);
    if (k < 0 || k > p.deg()) return zero;
    return p.c[static_cast<std::size_t>(k)];
}

inline const Value& lc(const Poly& p) {
    if (p.is_zero()) throw InternalError("leading coefficient of zero polynomial");
    return p.c.back();
}

// ---- value arithmetic (declared; bodies after Poly arithmetic) --------------

inline Value normalize_fraction(Poly num, Poly den);
inline Value operator+(const Value& a, const Value& b);
inline Value operator-(const Value& a, const Value& b);
inline Value operator*(const Value& a, const Value& b);
inline Value operator/(const Value& a, const Value& b);
inline Value operator-(const Value& a);
inline bool operator==(const Value& a, const Value& b);
inline Value inv(const Value& a);
inline Value value_pow(const Value& a, long e);
inline bool operator!=(const Value& a, const Value& b) { return !(a == b); }

// View a value as numerator/denominator in variable `var` (var >= level).
inline Poly num_at(const Value& v, int var) {
    if (v.level() < var) return poly_const(var, v);
    if (v.level() > var) throw InternalError("num_at below the value's level");
    return v.frac().num;
}

inline Poly den_at(const Value& v, int var) {
    if (v.level() < var) return poly_one(var);
    if (v.level() > var) throw InternalError("den_at below the value's level");
    return v.frac().den;
}

inline Value value_from_poly(const Poly& p) {
    if (p.is_zero()) return Value(0);
    if (p.deg() == 0) return p.c[0];
    return Value(std::make_shared<Frac>(Frac{p.var, p, poly_one(p.var)}));
}

// True when the value, viewed in variable var, has denominator 1.
inline bool is_polynomial_at(const Value& v, int var) {
    return v.level() < var || v.frac().den.deg() == 0;
}

// ---- polynomial arithmetic ---------------------------------------------------

inline void require_same_var(const Poly& a, const Poly& b) {
    if (a.var != b.var) throw InternalError("polynomial variable mismatch");
}

inline Poly operator+(const Poly& a, const Poly& b) {
    require_same_var(a, b);
    Poly r{a.var, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), Value(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size() && i < b.c.size()) r.c[i] = a.c[i] + b.c[i];
        else if (i < a.c.size()) r.c[i] = a.c[i];
        else r.c[i] = b.c[i];
    }
    poly_trim(r);
    return r;
}

inline Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

inline Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

inline Poly scale(const Poly& a, const Value& s) {
    if (s.is_zero()) return poly_zero(a.var);
    if (s.is_one()) return a;
    Poly r{a.var, {}};
    r.c.reserve(a.c.size());
    for (const auto& v : a.c) r.c.push_back(v * s);
    poly_trim(r); // a coefficient product cannot vanish over a field, but stay safe
    return r;
}

inline Poly operator*(const Poly& a, const Poly& b) {
    require_same_var(a, b);
    if (a.is_zero() || b.is_zero()) return poly_zero(a.var);
    check_degree(a.deg() + b.deg());
    Poly r{a.var, std::vector<Value>(a.c.size() + b.c.size() - 1, Value(0))};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
    }
    poly_trim(r);
    return r;
}

// a * var^k
inline Poly shift_up(const Poly& a, int k) {
    if (a.is_zero() || k == 0) return a;
    check_degree(a.deg() + k);
    Poly r{a.var, {}};
    r.c.resize(a.c.size() + static_cast<std::size_t>(k), Value(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + static_cast<std::size_t>(k)] = a.c[i];
    return r;
}

inline Poly poly_pow(Poly base, int e) {
    if (e < 0) throw InternalError("negative polynomial power");
    Poly r = poly_one(base.var);
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

// Division over the coefficient field: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_var(a, b);
    if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
    Poly q = poly_zero(a.var);
    Poly r = a;
    const Value li = inv(lc(b));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        Value cq = lc(r) * li;
        int k = r.deg() - b.deg();
        q = q + poly_monomial(a.var, cq, k);
        r = r - shift_up(scale(b, cq), k);
    }
    return {q, r};
}

inline Poly quo(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly rem(const Poly& a, const Poly& b) { return divmod(a, b).second; }

inline bool divides(const Poly& a, const Poly& b) {
    // a | b
    if (b.is_zero()) return true;
    if (a.is_zero()) return false;
    return rem(b, a).is_zero();
}

inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("division expected to be exact");
    return q;
}

inline Poly monic(const Poly& p) {
    if (p.is_zero() || lc(p).is_one()) return p;
    return scale(p, inv(lc(p)));
}

// Plain derivative d/dvar with coefficients held constant.
inline Poly d_dvar(const Poly& p) {
    Poly r{p.var, {}};
    for (int k = 1; k <= p.deg(); ++k) r.c.push_back(Value(Rational(k)) * p.c[static_cast<std::size_t>(k)]);
    poly_trim(r);
    return r;
}

inline Value eval_poly(const Poly& p, const Value& at) {
    Value r(0);
    for (int k = p.deg(); k >= 0; --k) r = r * at + p.c[static_cast<std::size_t>(k)];
    return r;
}

inline bool operator==(const Poly& a, const Poly& b) {
    if (a.var != b.var || a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}
inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

// ---- gcd machinery -----------------------------------------------------------

inline Poly poly_gcd(const Poly& a, const Poly& b);

// Denominator of a coefficient at its own level, as a value (1 for rationals'
// unit denominators handled separately).
inline Value coeff_denominator(const Value& v) {
    if (v.is_rational()) return Value(Rational(v.rational().get_den()));
    return value_from_poly(v.frac().den);
}

// gcd used for contents; values of different levels count as coprime.
inline Value content_gcd(const Value& a, const Value& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_rational() && b.is_rational()) return Value(rat_gcd(a.rational(), b.rational()));
    if (a.level() != b.level()) return Value(1);
    if (a.frac().den.deg() != 0 || b.frac().den.deg() != 0) return Value(1);
    return value_from_poly(poly_gcd(a.frac().num, b.frac().num));
}

inline Value common_denominator(const Poly& p) {
    Value l(1);
    for (const auto& v : p.c) {
        if (v.is_zero()) continue;
        Value d = coeff_denominator(v);
        if (d.is_one()) continue;
        Value g = content_gcd(l, d);
        l = l * (d / g);
    }
    return l;
}

inline Poly cleared(const Poly& p) { return scale(p, common_denominator(p)); }

inline Value poly_content(const Poly& p) {
    Value g(0);
    for (const auto& v : p.c) {
        if (v.is_zero()) continue;
        g = content_gcd(g, v);
        if (g.is_one()) break;
    }
    return g.is_zero() ? Value(1) : g;
}

inline Poly primitive_part(const Poly& p) {
    Value ct = poly_content(p);
    if (ct.is_one()) return p;
    return scale(p, inv(ct));
}

// ---- evaluation homomorphisms -------------------------------------------------

// Evaluate with every variable j mapped to point[j]; nullopt when a
// denominator vanishes.
inline std::optional<Rational> eval_rat(const Value& v, const std::vector<Rational>& point);

inline std::optional<Rational> eval_rat(const Poly& p, const std::vector<Rational>& point) {
    if (p.var >= static_cast<int>(point.size())) throw InternalError("evaluation point too short");
    const Rational& at = point[static_cast<std::size_t>(p.var)];
    Rational r = 0;
    for (int k = p.deg(); k >= 0; --k) {
        auto c = eval_rat(p.c[static_cast<std::size_t>(k)], point);
        if (!c) return std::nullopt;
        r = r * at + *c;
    }
    return r;
}

inline std::optional<Rational> eval_rat(const Value& v, const std::vector<Rational>& point) {
    if (v.is_rational()) return v.rational();
    auto n = eval_rat(v.frac().num, point);
    auto d = eval_rat(v.frac().den, point);
    if (!n || !d || *d == 0) return std::nullopt;
    return *n / *d;
}

// Keep the top variable formal, map the lower ones to rationals.
inline std::optional<UPoly<Rational>> eval_coeffs(const Poly& p, const std::vector<Rational>& point) {
    UPoly<Rational> out;
    out.c.reserve(p.c.size());
    for (const auto& c : p.c) {
        auto r = eval_rat(c, point);
        if (!r) return std::nullopt;
        out.c.push_back(*r);
    }
    out.trim();
    return out;
}

namespace detail_probe {

inline long mulmod(long a, long b, long p) {
    return static_cast<long>((static_cast<__int128>(a) * b) % p);
}
inline long powmod(long a, long e, long p) {
    long r = 1;
    a %= p;
    if (a < 0) a += p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::optional<long> rat_mod_p(const Rational& r, long p) {
    long den = static_cast<long>(mpz_fdiv_ui(r.get_den().get_mpz_t(), static_cast<unsigned long>(p)));
    if (den == 0) return std::nullopt;
    mpz_class n = r.get_num() % p;
    long num = n.get_si();
    if (num < 0) num += p;
    return mulmod(num, powmod(den, p - 2, p), p);
}

// degree of gcd of the mod-p images, or nullopt when p is unusable
inline std::optional<int> gcd_degree_mod_p(const UPoly<Rational>& a, const UPoly<Rational>& b, long p) {
    auto reduce = [&](const UPoly<Rational>& f) -> std::optional<std::vector<long>> {
        std::vector<long> out;
        out.reserve(f.c.size());
        for (const auto& c : f.c) {
            auto m = rat_mod_p(c, p);
            if (!m) return std::nullopt;
            out.push_back(*m);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    auto fa = reduce(a);
    auto fb = reduce(b);
    if (!fa || !fb) return std::nullopt;
    // leading coefficients must survive so degrees are preserved
    if (fa->size() != a.c.size() || fb->size() != b.c.size()) return std::nullopt;
    if (fa->empty() || fb->empty()) return std::nullopt;
    std::vector<long> u = std::move(*fa), v = std::move(*fb);
    while (!v.empty()) {
        // u mod v
        long li = powmod(v.back(), p - 2, p);
        while (u.size() >= v.size()) {
            long c = mulmod(u.back(), li, p);
            std::size_t off = u.size() - v.size();
            for (std::size_t i = 0; i < v.size(); ++i) {
                u[off + i] = (u[off + i] - mulmod(c, v[i], p)) % p;
                if (u[off + i] < 0) u[off + i] += p;
            }
            while (!u.empty() && u.back() == 0) u.pop_back();
            if (u.empty()) break;
        }
        std::swap(u, v);
    }
    return static_cast<int>(u.size()) - 1;
}

// certified: true means the rational polynomials are coprime
inline bool certified_coprime(const UPoly<Rational>& a, const UPoly<Rational>& b) {
    static const long primes[] = {2147483629L, 2147483587L, 2147483563L};
    for (long p : primes) {
        auto d = gcd_degree_mod_p(a, b, p);
        if (d) return *d == 0;
    }
    return false;
}

} // namespace detail_probe

// Fixed evaluation points for the probabilistic-but-sound coprimality check.
inline constexpr int gcd_probe_attempts = 3;

inline std::vector<Rational> gcd_probe_point(int vars, int attempt) {
    static const long num0[] = {2, 3, 5, 7, 11, 13, 17, 19};
    static const long num1[] = {-3, 5, -7, 9, -11, 15, -17, 21};
    static const long num2[] = {4, -5, 6, -7, 8, -9, 10, -11};
    std::vector<Rational> pt;
    pt.reserve(static_cast<std::size_t>(vars));
    for (int j = 0; j < vars; ++j) {
        switch (attempt) {
            case 0: pt.push_back(rat(num0[j % 8])); break;
            case 1: pt.push_back(rat(num1[j % 8], 2)); break;
            default: pt.push_back(rat(num2[j % 8], 3)); break;
        }
    }
    return pt;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
inline Poly prem(const Poly& a, const Poly& b) {
    require_same_var(a, b);
    if (b.is_zero()) throw ZeroDenominator("pseudo-division by zero");
    Poly r = a;
    const Value d = lc(b);
    int e = a.deg() - b.deg() + 1;
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        Poly t = shift_up(scale(b, lc(r)), k);
        r = scale(r, d) - t;
        --e;
    }
    if (e > 0) r = scale(r, value_pow(d, e));
    return r;
}

#ifdef HYPERRED_GCD_TRACE
void hyperred_gcd_trace_enter(const Poly& a, const Poly& b);
void hyperred_gcd_trace_leave(int var);
#endif

// Monic gcd via subresultant PRS on denominator-cleared primitive parts;
// keeping intermediate coefficients in the ring below controls blowup.
// A sound evaluation shortcut certifies the (common) coprime case first:
// the image of the monic gcd keeps its degree under any well-defined
// evaluation of the lower variables, so a coprime image proves coprimality.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    require_same_var(a, b);
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.deg() == 0 || b.deg() == 0) return poly_one(a.var);
    for (int attempt = 0; attempt < gcd_probe_attempts; ++attempt) {
        auto pt = gcd_probe_point(a.var, attempt);
        auto pa = eval_coeffs(a, pt);
        auto pb = eval_coeffs(b, pt);
        if (!pa || !pb || pa->is_zero() || pb->is_zero()) continue;
        if (detail_probe::certified_coprime(*pa, *pb)) return poly_one(a.var);
        break;
    }
#ifdef HYPERRED_GCD_TRACE
    hyperred_gcd_trace_enter(a, b);
#endif
    Poly A = primitive_part(cleared(a));
    Poly B = primitive_part(cleared(b));
    if (A.deg() < B.deg()) std::swap(A, B);
    Value g(1), h(1);
    while (true) {
        int delta = A.deg() - B.deg();
        Poly R = prem(A, B);
        if (R.is_zero()) break;
        if (R.deg() == 0) {
#ifdef HYPERRED_GCD_TRACE
            hyperred_gcd_trace_leave(a.var);
#endif
            return poly_one(a.var);
        }
        R = scale(R, inv(g * value_pow(h, delta)));
        A = std::move(B);
        B = std::move(R);
        g = lc(A);
        if (delta > 0) h = value_pow(g, delta) / value_pow(h, delta - 1);
    }
#ifdef HYPERRED_GCD_TRACE
    hyperred_gcd_trace_leave(a.var);
#endif
    return monic(primitive_part(B));
}

// ---- canonical fractions -----------------------------------------------------

inline Value normalize_fraction(Poly num, Poly den) {
    require_same_var(num, den);
    if (den.is_zero()) throw ZeroDenominator();
    poly_trim(num);
    poly_trim(den);
    if (num.is_zero()) return Value(0);
    Poly g = poly_gcd(num, den);
    if (g.deg() >= 1) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    const Value l = lc(den);
    if (!l.is_one()) {
        Value li = inv(l);
        den = scale(den, li);
        num = scale(num, li);
    }
    if (den.deg() == 0 && num.deg() == 0) return num.c[0]; // drop to the field below
    return Value(std::make_shared<Frac>(Frac{num.var, std::move(num), std::move(den)}));
}

namespace detail_value {

// Assemble a fraction already known to be canonical (coprime, monic den).
inline Value make_canonical(Poly num, Poly den) {
    poly_trim(num);
    if (num.is_zero()) return Value(0);
    if (den.deg() == 0) return value_from_poly(num);
    return Value(std::make_shared<Frac>(Frac{num.var, std::move(num), std::move(den)}));
}

} // namespace detail_value

inline Value operator+(const Value& a, const Value& b) {
    if (a.is_rational() && b.is_rational()) return Value(Rational(a.rational() + b.rational()));
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.level() != b.level()) {
        // adding a unit from a lower level cannot disturb coprimality
        const Value& hi = a.level() > b.level() ? a : b;
        const Value& lo = a.level() > b.level() ? b : a;
        const Frac& f = hi.frac();
        return detail_value::make_canonical(f.num + scale(f.den, lo), f.den);
    }
    int w = a.level();
    const Poly& na = a.frac().num;
    const Poly& da = a.frac().den;
    const Poly& nb = b.frac().num;
    const Poly& db = b.frac().den;
    if (da.deg() == 0 && db.deg() == 0) return detail_value::make_canonical(na + nb, poly_one(w));
    // Henrici's addition keeps the result in lowest terms with two small gcds
    Poly d1 = poly_gcd(da, db);
    if (d1.deg() == 0) return detail_value::make_canonical(na * db + nb * da, da * db);
    Poly das = exact_div(da, d1), dbs = exact_div(db, d1);
    Poly t = na * dbs + nb * das;
    if (t.is_zero()) return Value(0);
    Poly d2 = poly_gcd(t, d1);
    if (d2.deg() > 0) t = exact_div(t, d2);
    Poly den = das * (d2.deg() > 0 ? exact_div(db, d2) : db);
    return detail_value::make_canonical(std::move(t), std::move(den));
}

inline Value operator-(const Value& a) {
    if (a.is_rational()) return Value(Rational(-a.rational()));
    const Frac& f = a.frac();
    return Value(std::make_shared<Frac>(Frac{f.var, -f.num, f.den}));
}

inline Value operator-(const Value& a, const Value& b) { return a + (-b); }

inline Value operator*(const Value& a, const Value& b) {
    if (a.is_rational() && b.is_rational()) return Value(Rational(a.rational() * b.rational()));
    if (a.is_zero() || b.is_zero()) return Value(0);
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (a.level() != b.level()) {
        // multiplying by a unit from a lower level keeps the fraction reduced
        const Value& hi = a.level() > b.level() ? a : b;
        const Value& lo = a.level() > b.level() ? b : a;
        const Frac& f = hi.frac();
        return detail_value::make_canonical(scale(f.num, lo), f.den);
    }
    const Frac& fa = a.frac();
    const Frac& fb = b.frac();
    // cross-cancel, then the product is already in lowest terms
    Poly na = fa.num, da = fa.den, nb = fb.num, db = fb.den;
    Poly g1 = poly_gcd(na, db);
    if (g1.deg() > 0) {
        na = exact_div(na, g1);
        db = exact_div(db, g1);
    }
    Poly g2 = poly_gcd(nb, da);
    if (g2.deg() > 0) {
        nb = exact_div(nb, g2);
        da = exact_div(da, g2);
    }
    return detail_value::make_canonical(na * nb, da * db);
}

inline Value inv(const Value& a) {
    if (a.is_zero()) throw ZeroDenominator("inverse of zero");
    if (a.is_rational()) return Value(Rational(1 / a.rational()));
    const Frac& f = a.frac();
    Poly num = f.den, den = f.num;
    const Value l = lc(den);
    if (!l.is_one()) {
        Value li = inv(l);
        num = scale(num, li);
        den = scale(den, li);
    }
    if (den.deg() == 0 && num.deg() == 0) return num.c[0];
    return Value(std::make_shared<Frac>(Frac{num.var, std::move(num), std::move(den)}));
}

inline Value operator/(const Value& a, const Value& b) {
    if (b.is_zero()) throw ZeroDenominator("division by zero");
    if (a.is_rational() && b.is_rational()) return Value(Rational(a.rational() / b.rational()));
    return a * inv(b);
}

inline bool operator==(const Value& a, const Value& b) {
    if (a.is_rational() != b.is_rational()) return false;
    if (a.is_rational()) return a.rational() == b.rational();
    const Frac& fa = a.frac();
    const Frac& fb = b.frac();
    return fa.var == fb.var && fa.num == fb.num && fa.den == fb.den;
}

inline Value value_pow(const Value& a, long e) {
    if (e < 0) return inv(value_pow(a, -e));
    Value r(1), base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

} // namespace hyperred
