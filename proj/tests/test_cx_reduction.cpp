#include <catch2/catch_amalgamated.hpp>

#include "hyperred/cx_reduction.hpp"

#include "helpers.hpp"

using namespace hyperred;
using namespace hyperred::testing;

namespace {
const TowerSpec base; // Q(x) only
}

TEST_CASE("hermite-ostrogradsky basics") {
    CHECK(hermite_ostrogradsky(V("x^2", base)).u == V("x^3/3", base));
    CHECK(hermite_ostrogradsky(V("x^2", base)).v.is_zero());

    auto r = hermite_ostrogradsky(V("1/x^2", base));
    CHECK(r.u == V("-1/x", base));
    CHECK(r.v.is_zero());

    r = hermite_ostrogradsky(V("1/(x^2-1)", base));
    CHECK(r.u.is_zero());
    CHECK(r.v == V("1/(x^2-1)", base));
}

TEST_CASE("hermite-ostrogradsky on random rational functions") {
    Rng rng(101);
    for (int i = 0; i < 100; ++i) {
        Value f = random_value(rng, 0, 3, 3);
        auto r = hermite_ostrogradsky(f);
        CHECK(derive(r.u, base) + r.v == f);
        if (!r.v.is_zero()) {
            Poly dv = den_at(r.v, 0);
            CHECK(dv.deg() >= 1);
            CHECK(num_at(r.v, 0).deg() < dv.deg());
            CHECK(poly_gcd(dv, d_dvar(dv)).deg() == 0); // squarefree denominator
        }
    }
}

TEST_CASE("residual basis: pivots cover everything for xi = 1 and xi = 1/x") {
    // xi = 1: phi(x^i) = i x^(i-1) + x^i, pivots at every degree, N = {0}
    ResidualBasis b = build_residual_basis(Value(1), 5);
    CHECK(b.complement.empty());
    // xi = 1/x: phi(a) = x a' + a, phi(x^i) = (i+1) x^i, N = {0}
    b = build_residual_basis(V("1/x", base), 5);
    CHECK(b.complement.empty());
    for (int d = 0; d <= 5; ++d) {
        Poly p = poly_monomial(0, Value(rat(3, 2)), d);
        auto proj = project_residual(b, p);
        CHECK(proj.q.is_zero());
        // phi(w) = p
        Poly img = num_at(b.xi, 0) * proj.w + den_at(b.xi, 0) * d_dvar(proj.w);
        CHECK(img == p);
    }
}

TEST_CASE("residual basis: negative residue kernels are rejected") {
    CHECK_THROWS_AS(build_residual_basis(V("-1/x", base), 4), NotDifferentialReduced);
    CHECK_THROWS_AS(build_residual_basis(V("-2/x - 1/(x+3)", base), 4), NotDifferentialReduced);
}

TEST_CASE("residual basis: projection splits im(phi) from N") {
    // xi = 1/(x^3 - x - 2): N = span{x, x^2}
    Value xi = V("1/(x^3-x-2)", base);
    ResidualBasis b = build_residual_basis(xi, 6);
    CHECK(b.complement == std::vector<int>{1, 2});

    Rng rng(103);
    for (int i = 0; i < 30; ++i) {
        Poly p = random_poly(rng, 0, rng.uniform(0, 5), false, 3);
        auto proj = project_residual(b, p);
        Poly img = den_at(xi, 0) * d_dvar(proj.w) + num_at(xi, 0) * proj.w;
        CHECK(img + proj.q == p);
        for (int k = 0; k <= proj.q.deg(); ++k) {
            if (coeff(proj.q, k).is_zero()) continue;
            CHECK(std::find(b.complement.begin(), b.complement.end(), k) != b.complement.end());
        }
        // injectivity: images project to zero
        auto again = project_residual(grow(b, img.deg()), img);
        CHECK(again.q.is_zero());
        // idempotence: elements of N project to themselves
        auto fixed = project_residual(b, proj.q);
        CHECK(fixed.q == proj.q);
        CHECK(fixed.w.is_zero());
    }
}

TEST_CASE("hyperexp hermite: exp(x) integrates") {
    auto r = hyperexp_hermite(Value(1), Value(1));
    CHECK(r.form.is_zero());
    CHECK(r.w == Value(1));
    CHECK(r.eta == Value(1));
    CHECK(r.xi == Value(1));
}

TEST_CASE("hyperexp hermite: exp(x^2) does not integrate") {
    auto r = hyperexp_hermite(Value(1), V("2*x", base));
    CHECK(!r.form.is_zero());
    CHECK(!r.form.poly.is_zero());
}

TEST_CASE("hyperexp hermite: the Example 1.1 kernel") {
    auto r = hyperexp_hermite(Value(1), V("1/(x^3-x-2)", base));
    CHECK(!r.form.is_zero());
    // certificate identity over Q(x): g eta = w' + w xi + v + q/den(xi)
    Value lhs = Value(1) * r.eta;
    Value rhs = derive(r.w, base) + r.w * r.xi + r.form.combined();
    CHECK(lhs == rhs);
}

TEST_CASE("hyperexp hermite: certificate identity and derivative detection") {
    Rng rng(107);
    int integrable_seen = 0;
    for (int i = 0; i < 40; ++i) {
        Value omega = random_value(rng, 0, 2, 2);
        Value g = random_value(rng, 0, 2, 2);
        auto r = hyperexp_hermite(g, omega);
        Value lhs = g * r.eta;
        Value rhs = derive(r.w, base) + r.w * r.xi + r.form.combined();
        CHECK(lhs == rhs);
    }
    // constructed derivatives of hyperexponential elements reduce to zero:
    // (a y)' = (a' + a omega) y
    for (int i = 0; i < 25; ++i) {
        Value omega = random_value(rng, 0, 1, 2);
        Value a = random_value(rng, 0, 1, 2);
        Value g = derive(a, base) + a * omega;
        auto r = hyperexp_hermite(g, omega);
        CHECK(r.form.is_zero());
        ++integrable_seen;
    }
    CHECK(integrable_seen == 25);
}
