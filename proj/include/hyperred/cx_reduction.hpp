#pragma once

// The Q(x) toolkit: Hermite-Ostrogradsky reduction, the residual-form
// machinery around the map phi_xi(a) = den(xi) a' + num(xi) a, and the full
// Hermite reduction for hyperexponential functions g * exp(int omega).

#include <map>
#include <vector>

#include "hyperred/kernel_shell.hpp"
#include "hyperred/reductions.hpp"

namespace hyperred {

// f = derive(u) + v with v x-simple; v = 0 iff f has a rational integral.
struct HermiteResult {
    Value u;
    Value v;
};

inline HermiteResult hermite_ostrogradsky(const Value& f) {
    if (f.level() > 0) throw PreconditionViolated("hermite_ostrogradsky works over Q(x)");
    static const TowerSpec base;
    if (f.is_zero()) return {Value(0), Value(0)};
    Poly num = num_at(f, 0);
    Poly den = den_at(f, 0);
    auto [p, r] = divmod(num, den);
    // integrate the polynomial part exactly
    Poly u_poly = poly_zero(0);
    for (int k = 0; k <= p.deg(); ++k) {
        const Value& c = coeff(p, k);
        if (!c.is_zero()) u_poly = u_poly + poly_monomial(0, c / Value(Rational(k + 1)), k + 1);
    }
    Value u = value_from_poly(u_poly);
    if (r.is_zero()) return {u, Value(0)};
    GsrResult red = gsr(Value(0), normalize_fraction(r, den), base, 0);
    if (!red.q.is_zero()) throw InternalError("proper part left a polynomial residue");
    return {u + red.a, red.h};
}

// ---- residual bases ----------------------------------------------------------

// Echelon data for im(phi_xi) up to a degree bound, with preimages, plus the
// complement N.  phi_xi is injective on C[x] when xi has no negative integer
// residue (in particular for every normalized kernel); the builder checks
// exactly that condition, since a kernel that is the negative of a polynomial
// logarithmic derivative would put a nonzero polynomial in the kernel of
// phi_xi.
struct ResidualBasis {
    Value xi;
    int bound = 0; // projections are valid for polynomials of degree <= bound
    struct Row {
        Poly image;    // reduced image, pivot at its leading degree
        Poly preimage; // phi(preimage) = image
    };
    std::map<int, Row> pivots;
    std::vector<int> complement; // degrees <= bound without a pivot
};

inline ResidualBasis build_residual_basis(const Value& xi, int degree_bound) {
    if (xi.level() > 0) throw PreconditionViolated("residual bases live over Q(x)");
    static const TowerSpec base;
    ResidualBasis out;
    out.xi = xi;
    out.bound = degree_bound;
    Poly nx = num_at(xi, 0);
    Poly dx = den_at(xi, 0);
    if (dx.deg() > 0) {
        // reject kernels with a negative integer residue
        Poly dd = derive_poly(dx, base);
        for (long m : detail_ks::integer_candidates(nx, dd, dx, default_seed)) {
            if (m >= 0) continue;
            if (poly_gcd(nx - scale(dd, Value(m)), dx).deg() > 0)
                throw NotDifferentialReduced("kernel has negative integer residue " + std::to_string(m));
        }
    }
    int dn = nx.deg(); // >= 0 unless xi == 0
    int dd_deg = dx.deg();
    int s_min = std::min(dn, dd_deg - 1);
    int top = degree_bound - std::min(s_min, 0) + 1;
    if (dn == dd_deg - 1 && dn >= 0) {
        // the single degree where the leading terms can cancel
        Value astar = -coeff(nx, dn) / coeff(dx, dd_deg);
        if (astar.is_rational() && is_integer(astar.rational()) && astar.rational() > 0)
            top = std::max(top, static_cast<int>(to_long(astar.rational())) + 1);
    }
    auto phi = [&](const Poly& a) { return dx * d_dvar(a) + nx * a; };
    for (int i = 0; i <= top; ++i) {
        Poly pre = poly_monomial(0, Value(1), i);
        Poly img = phi(pre);
        while (!img.is_zero()) {
            auto it = out.pivots.find(img.deg());
            if (it == out.pivots.end()) break;
            Value c = lc(img) / lc(it->second.image);
            img = img - scale(it->second.image, c);
            pre = pre - scale(it->second.preimage, c);
        }
        if (!img.is_zero()) out.pivots.emplace(img.deg(), ResidualBasis::Row{img, pre});
    }
    for (int d = 0; d <= degree_bound; ++d)
        if (!out.pivots.count(d)) out.complement.push_back(d);
    return out;
}

// Lazy growth: a fresh, larger basis (bases are immutable once built).
inline ResidualBasis grow(const ResidualBasis& basis, int degree_bound) {
    if (degree_bound <= basis.bound) return basis;
    return build_residual_basis(basis.xi, degree_bound);
}

struct ResidualProjection {
    Poly w; // phi(w) + q = p
    Poly q; // supported on complement degrees
};

inline ResidualProjection project_residual(const ResidualBasis& basis, const Poly& p) {
    if (p.deg() > basis.bound) throw PreconditionViolated("polynomial exceeds the basis bound");
    Poly q = p;
    Poly w = poly_zero(0);
    while (!q.is_zero()) {
        auto it = basis.pivots.find(q.deg());
        if (it == basis.pivots.end()) {
            // leading degree lies in N; strip it and keep reducing below
            Poly mono = poly_monomial(0, lc(q), q.deg());
            Poly rest = q - mono;
            ResidualProjection sub = project_residual(basis, rest);
            return {w + sub.w, mono + sub.q};
        }
        Value c = lc(q) / lc(it->second.image);
        q = q - scale(it->second.image, c);
        w = w + scale(it->second.preimage, c);
    }
    return {w, q};
}

// ---- Hermite reduction for hyperexponential functions --------------------------

// v + q/den(xi) with v x-simple and q in the complement of im(phi_xi)
struct ResidualForm {
    Value simple;
    Poly poly;
    Value xi;

    bool is_zero() const { return simple.is_zero() && poly.is_zero(); }
    Value combined() const {
        return simple + value_from_poly(poly) / value_from_poly(den_at(xi, 0));
    }
};

struct HyperexpHermite {
    Value w;           // g exp(int omega) = (w eta^-1 y)' + r eta^-1 y with y = exp(int omega)
    ResidualForm form; // r
    Value xi;
    Value eta;
};

// reduce G against a normalized kernel xi: G = w' + w xi + v + q/den(xi)
inline HyperexpHermite reduce_against_kernel(const Value& g_times_eta, const Value& xi) {
    static const TowerSpec base;
    ReductionCertificate cert = gksr(xi, g_times_eta, base, 0, false);
    if (!is_polynomial_at(cert.r, 0)) throw InternalError("level-0 residue must be polynomial");
    Poly pstar = num_at(cert.r, 0);
    ResidualBasis basis = build_residual_basis(xi, std::max(pstar.deg(), 0) + 1);
    ResidualProjection proj = project_residual(basis, pstar);
    HyperexpHermite out;
    out.xi = xi;
    out.w = cert.a + value_from_poly(proj.w);
    out.form = ResidualForm{cert.h, proj.q, xi};
    out.eta = Value(1);
    return out;
}

// the integrand is g * exp(int omega)
inline HyperexpHermite hyperexp_hermite(const Value& g, const Value& omega) {
    if (g.level() > 0 || omega.level() > 0)
        throw PreconditionViolated("hyperexp_hermite works over Q(x)");
    static const TowerSpec base;
    KernelShell ks = gks(omega, base, 0, KernelMode::normalized);
    HyperexpHermite out = reduce_against_kernel(g * ks.shell, ks.kernel);
    out.eta = ks.shell;
    return out;
}

} // namespace hyperred
