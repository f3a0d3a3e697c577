#include <catch2/catch_amalgamated.hpp>

#include "hyperred/ad_rht.hpp"
#include "hyperred/vf_membership.hpp"

#include "helpers.hpp"

using namespace hyperred;
using namespace hyperred::testing;

namespace {

void check_decomposition(const Value& f, const AdditiveDecomposition& d, const TowerSpec& spec) {
    CHECK(derive(d.g, spec) + d.remainder == f);
    for (const auto& term : d.terms) {
        CHECK(!term.coeff.is_zero());
        if (term.level >= 1) {
            Classification c = classify(term.coeff, spec, term.level);
            CHECK(c.is_simple);
        } else if (term.residual) {
            // level-0 residual structure: v x-simple, q in the complement of im(phi)
            const ResidualForm& rf = *term.residual;
            if (!rf.simple.is_zero()) {
                Poly dv = den_at(rf.simple, 0);
                CHECK(num_at(rf.simple, 0).deg() < dv.deg());
                CHECK(poly_gcd(dv, d_dvar(dv)).deg() == 0);
            }
            if (!rf.poly.is_zero()) {
                ResidualBasis basis = build_residual_basis(rf.xi, rf.poly.deg() + 1);
                auto proj = project_residual(basis, rf.poly);
                CHECK(proj.w.is_zero());
                CHECK(proj.q == rf.poly);
            }
        } else {
            // the lone x-simple term
            Poly dv = den_at(term.coeff, 0);
            CHECK(num_at(term.coeff, 0).deg() < dv.deg());
            CHECK(poly_gcd(dv, d_dvar(dv)).deg() == 0);
        }
    }
}

} // namespace

TEST_CASE("ad_rht: depth-3 golden example") {
    TowerSpec spec = tower_depth3();
    Value f = V("-(x-1)*t1/t2 + t3/(1+t2)^2 + x/(t3+x)^2", spec);
    AdditiveDecomposition d = ad_rht(f, spec);
    CHECK(d.g == V("-x^2/((x-1)*(t3+x)) + t3/(x*(1+t2)) + t1/t2", spec));
    CHECK(d.remainder == V("(x^3+x-1)*t3/(x^3*(1+t2)) + (x^2-3*x+1)/((x-1)^2*(t3+x))", spec));
    CHECK(!is_derivative(f, spec));
    check_decomposition(f, d, spec);
}

TEST_CASE("ad_rht: an element that is already its own remainder") {
    // the level-2 fraction is t2-simple with T = 1, so nothing reduces
    TowerSpec spec = tower_example11();
    Value f = V("(x^3-x-3)*t1/((x^3-x-2)*(t1+t2))", spec);
    AdditiveDecomposition d = ad_rht(f, spec);
    CHECK(d.g.is_zero());
    CHECK(d.remainder == f);
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].level == 2);
    check_decomposition(f, d, spec);
}

TEST_CASE("ad_rht: zero input and derivatives") {
    TowerSpec spec = tower_depth3();
    AdditiveDecomposition d = ad_rht(Value(0), spec);
    CHECK(d.g.is_zero());
    CHECK(d.remainder.is_zero());

    Rng rng(109);
    for (int i = 0; i < 25; ++i) {
        Value u = random_value(rng, rng.uniform(0, 2), 1, 2);
        Value f = derive(u, spec);
        if (f.is_zero()) continue;
        AdditiveDecomposition du = ad_rht(f, spec);
        CHECK(du.remainder.is_zero());
        CHECK(derive(du.g, spec) == f);
        CHECK(is_derivative(f, spec));
    }
    // a nonzero x-simple element of Q(x) is never a derivative
    CHECK(!is_derivative(V("1/(x^2-1)", spec), spec));
}

TEST_CASE("ad_rht: certificate identity on random inputs") {
    TowerSpec spec = tower_depth3();
    Rng rng(113);
    for (int i = 0; i < 30; ++i) {
        Value f = random_value(rng, rng.uniform(0, 3), 1, 2);
        if (f.is_zero()) continue;
        AdditiveDecomposition d = ad_rht(f, spec);
        check_decomposition(f, d, spec);
    }
}

TEST_CASE("ad_rht: remainder idempotence and linearity") {
    TowerSpec spec = tower_depth3();
    Rng rng(127);
    for (int i = 0; i < 12; ++i) {
        Value f1 = random_value(rng, rng.uniform(1, 3), 1, 2);
        Value f2 = random_value(rng, rng.uniform(1, 3), 1, 2);
        AdditiveDecomposition d1 = ad_rht(f1, spec);
        AdditiveDecomposition d2 = ad_rht(f2, spec);
        AdditiveDecomposition dsum = ad_rht(f1 + f2, spec);
        CHECK(dsum.remainder == d1.remainder + d2.remainder);
        // idempotence: remainders decompose to themselves
        AdditiveDecomposition dr = ad_rht(d1.remainder, spec);
        CHECK(dr.g.is_zero());
        CHECK(same_remainder(dr, d1));
    }
}

TEST_CASE("ad_rht: rejects non-rational towers") {
    TowerSpec spec;
    spec.generators.push_back(Generator{"y", value_from_poly(poly_var(0)), "exp(int(x))", true});
    Value xy = value_from_poly(poly_var(0)) * value_from_poly(poly_var(1));
    spec.generators.push_back(Generator{"u", xy, "exp(y)", true});
    spec.validate();
    CHECK_THROWS_AS(ad_rht(parse_value("u", spec), spec), UnsupportedTower);
}

TEST_CASE("in_vf: membership from constructed certificates") {
    TowerSpec spec = tower_t(); // t' = x t
    Rng rng(131);
    for (int i = 0; i < 12; ++i) {
        Value f = random_value(rng, 0, 1, 2); // direction in Q(x)
        if (!is_weakly_normalized(f, spec, 1, KernelMode::weak).ok) continue;
        Value u = random_value(rng, 1, 1, 2);
        Value g = derive(u, spec) + u * f;
        if (g.is_zero()) continue;
        CHECK(in_vf(f, g, spec, 1));
    }
}

TEST_CASE("in_vf: depth-2 membership with Laurent certificates") {
    TowerSpec spec = tower_example11();
    Value f = V("1/(x^2+1)", spec);
    // u mixes a Laurent part in t2 with lower-level content
    Value u = V("t2 + x/t2 + t1/(x+1)", spec);
    Value g = derive(u, spec) + u * f;
    CHECK(in_vf(f, g, spec, 2));
    CHECK(in_vf(f, derive(V("t1*t2", spec), spec) + V("t1*t2", spec) * f, spec, 2));
}

TEST_CASE("in_vf: negatives") {
    TowerSpec spec = tower_t();
    // nonzero t-simple g with f = 0
    CHECK(!in_vf(Value(0), V("x/(t+1)", spec), spec, 1));
    // t = exp(x^2/2) is not the derivative of any (a t): a' + x a = 1 has no
    // rational solution
    CHECK(!in_vf(Value(0), V("t", spec), spec, 1));
    // the shell-and-kernel example has h != 0
    TowerSpec spec2 = tower_xy();
    Value f = V("y/(t-x)", spec2);
    Value g = V("(-x*t^3+(y-x+1)*t^2+(2*y-2*x^2-x+2)*t+x^3+y+1)/((1+t)^2*(t-x)^2)", spec2);
    CHECK(!in_vf(f, g, spec2, 2));
}

TEST_CASE("in_vf: unsupported shapes are reported") {
    TowerSpec spec = tower_xy();
    Value f = V("y/(t-x)", spec);
    // leftover reduced residual with f outside Q(x)
    CHECK_THROWS_AS(in_vf(f, V("t", spec), spec, 2), UnsupportedCase);
    // non-normalized directions are rejected up front
    Value p = V("t-x", spec);
    CHECK_THROWS_AS(in_vf(derive(p, spec) / p, Value(1), spec, 2), NotWeaklyNormalized);
}
