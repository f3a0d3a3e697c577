#include <catch2/catch_amalgamated.hpp>

#include "hyperred/kernel_shell.hpp"

#include "helpers.hpp"

using namespace hyperred;
using namespace hyperred::testing;

namespace {

// the four defining requirements of a kernel/shell pair
void check_kernel_shell(const Value& f, const KernelShell& ks, const TowerSpec& spec, int level) {
    REQUIRE(!ks.shell.is_zero());
    Value back = derive(ks.shell, spec) / ks.shell + ks.kernel;
    CHECK(back == f);
    Poly eden = den_at(ks.shell, level);
    if (eden.deg() > 0 && level >= 1) {
        auto sp = split_normal_special(eden, spec);
        CHECK(sp.special.deg() == 0);
    }
    Poly kden = den_at(ks.kernel, level);
    CHECK(poly_gcd(eden, kden).deg() == 0);
    CHECK(poly_gcd(num_at(ks.shell, level), kden).deg() == 0);
    CHECK(is_weakly_normalized(ks.kernel, spec, level, ks.mode).ok);
}

} // namespace

TEST_CASE("weak normalization test") {
    TowerSpec spec = tower_xy(); // y = var 1 (y'=y), t = var 2 (t'=xt)
    CHECK(is_weakly_normalized(V("y/(t-x)", spec), spec, 2, KernelMode::weak).ok);
    // p'/p for normal p fails with witness 1 and common factor p
    Value p = V("t-x", spec);
    Value f = derive(p, spec) / p;
    auto wn = is_weakly_normalized(f, spec, 2, KernelMode::weak);
    CHECK(!wn.ok);
    CHECK(wn.least_offender == 1);
    CHECK(wn.common_factor == p);
    // elements of F are trivially fine
    CHECK(is_weakly_normalized(V("y/(x+1)", spec), spec, 2, KernelMode::weak).ok);
    // weak vs normalized: -2 p'/p offends only the normalized test
    Value g = Value(-2) * derive(p, spec) / p;
    CHECK(is_weakly_normalized(g, spec, 2, KernelMode::weak).ok);
    auto wn2 = is_weakly_normalized(g, spec, 2, KernelMode::normalized);
    CHECK(!wn2.ok);
    CHECK(wn2.least_offender == -2);
}

TEST_CASE("integer lambda candidates") {
    TowerSpec spec = build_tower({{"t", "exp(x^2/2)"}}); // t' = x t
    // nothing removable: the residue of 1/(t+1) at t+1 is -1/x, not an integer
    Value f = V("1/(t+1)", spec);
    Poly p = as_poly(V("t+1", spec), 1);
    CHECK(integer_lambda_candidates(f, p, spec, 1).empty());

    // f = 3 p'/p + 1/(x^2+1) with p = t - x
    p = as_poly(V("t-x", spec), 1);
    f = Value(3) * derive(V("t-x", spec), spec) / V("t-x", spec) + V("1/(x^2+1)", spec);
    auto cands = integer_lambda_candidates(f, p, spec, 1);
    CHECK(std::find(cands.begin(), cands.end(), 3) != cands.end());

    // level 0: f = -2 p'/p for p = x + 1
    TowerSpec base; // empty tower, Q(x) only
    Value f0 = V("-2/(x+1)", base);
    Poly p0 = as_poly(V("x+1", base), 0);
    auto c0 = integer_lambda_candidates(f0, p0, base, 0);
    CHECK(std::find(c0.begin(), c0.end(), -2) != c0.end());
}

TEST_CASE("gks: elements of F and already-normalized inputs") {
    TowerSpec spec = tower_xy();
    Value f = V("y/(x+1)", spec);
    KernelShell ks = gks(f, spec, 2, KernelMode::weak);
    CHECK(ks.kernel == f);
    CHECK(ks.shell == Value(1));

    f = V("y/(t-x)", spec);
    ks = gks(f, spec, 2, KernelMode::weak);
    CHECK(ks.kernel == f);
    CHECK(ks.shell == Value(1));
    check_kernel_shell(f, ks, spec, 2);
}

TEST_CASE("gks: construct-and-recover at level 1") {
    // eta = (t-x)^2 (t+1), xi0 = 1/(x^2+1), t'/t = 1/(x^2+1)
    TowerSpec spec = build_tower({{"t", "exp(int(1/(x^2+1)))"}});
    Value eta = V("(t-x)^2*(t+1)", spec);
    Value xi0 = V("1/(x^2+1)", spec);
    Value f = derive(eta, spec) / eta + xi0;
    KernelShell ks = gks(f, spec, 1, KernelMode::weak);
    CHECK(ks.shell == eta);
    CHECK(ks.kernel == xi0);
    check_kernel_shell(f, ks, spec, 1);
    // idempotence: the kernel has shell 1
    KernelShell again = gks(ks.kernel, spec, 1, KernelMode::weak);
    CHECK(again.shell == Value(1));
    CHECK(again.kernel == ks.kernel);
}

TEST_CASE("gks: printed textbook instance satisfies the defining identities") {
    // The output contract is checked through the four requirements rather
    // than against any fixed kernel/shell pair; shells are only unique up to
    // a constant, and hand-printed values are easy to mistype.
    TowerSpec spec = build_tower({{"t", "exp(int(1/(x^2+1)))"}});
    Value f = V("(x^3*t+x^2*t+2*x*t+t+1)/((x*t+1)*(x^2+1))", spec);
    KernelShell ks = gks(f, spec, 1, KernelMode::weak);
    check_kernel_shell(f, ks, spec, 1);
}

TEST_CASE("gks: normalized mode at level 0") {
    TowerSpec base;
    // eta = (x-2)/(x+1)^2 has a negative exponent; only the normalized
    // search can remove it
    Value eta = V("(x-2)/(x+1)^2", base);
    Value xi0 = V("1/(x^2+1)", base);
    Value f = derive(eta, base) / eta + xi0;
    KernelShell ks = gks(f, base, 0, KernelMode::normalized);
    CHECK(ks.kernel == xi0);
    CHECK(ks.shell == eta);
    check_kernel_shell(f, ks, base, 0);
    CHECK_THROWS_AS(gks(f, base, 0, KernelMode::weak), PreconditionViolated);
}

TEST_CASE("gks: random construct-and-recover with mixed exponents") {
    TowerSpec spec = build_tower({{"t", "exp(x^2/2)"}});
    Rng rng(61);
    int done = 0;
    while (done < 30) {
        long m1 = rng.uniform(1, 3);
        long m2 = rng.uniform(1, 2);
        Value p1 = V("t-x", spec);
        Value p2 = V("t+1", spec);
        Value noise = random_value(rng, 0, 1, 2);
        Value f = Value(Rational(m1)) * derive(p1, spec) / p1 +
                  Value(Rational(m2)) * derive(p2, spec) / p2 + noise;
        KernelShell ks = gks(f, spec, 1, KernelMode::weak);
        check_kernel_shell(f, ks, spec, 1);
        CHECK(ks.shell == value_pow(p1, m1) * value_pow(p2, m2));
        ++done;
    }
}

TEST_CASE("gks: shell support divides den(f)") {
    TowerSpec spec = build_tower({{"t", "exp(x^2/2)"}});
    Rng rng(67);
    for (int i = 0; i < 20; ++i) {
        Value den = V("t-x", spec) * V("t+1", spec);
        long m = rng.uniform(1, 3);
        Value f = Value(Rational(m)) * derive(V("t-x", spec), spec) / V("t-x", spec) +
                  random_value(rng, 0, 1, 2) / V("t+1", spec);
        KernelShell ks = gks(f, spec, 1, KernelMode::weak);
        check_kernel_shell(f, ks, spec, 1);
        // every irreducible factor moved into the shell came from den(f)
        Poly fd = den_at(f, 1);
        for (const Poly& part : {num_at(ks.shell, 1), den_at(ks.shell, 1)}) {
            if (part.deg() == 0) continue;
            for (const auto& sf : squarefree_factorization(part).factors)
                CHECK(poly_gcd(sf.factor, fd) == sf.factor);
        }
    }
}
