#include <catch2/catch_amalgamated.hpp>

#include "hyperred/cli.hpp"
#include "hyperred/format.hpp"

#include <sstream>

#include "helpers.hpp"

using namespace hyperred;
using namespace hyperred::testing;

TEST_CASE("parse: generator references through exp forms") {
    TowerSpec spec = tower_depth3();
    CHECK(V("x/(exp(-1/x)+x)^2", spec) == V("x/(t3+x)^2", spec));
    TowerSpec e11 = tower_example11();
    CHECK(V("exp(int(1/(x^3-x-2)))", e11) == V("t2", e11));
    CHECK(V("exp(x)", e11) == V("t1", e11));
    // undeclared exponentials are rejected
    CHECK_THROWS_AS(V("exp(x^3)", e11), UnknownIdentifier);
}

TEST_CASE("parse: syntax errors carry positions") {
    TowerSpec spec;
    try {
        parse_value("x+", spec);
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 2); // column 3
    }
    CHECK_THROWS_AS(parse_value("", spec), SyntaxError);
    CHECK_THROWS_AS(parse_value("(x", spec), SyntaxError);
    CHECK_THROWS_AS(parse_value("nope", spec), UnknownIdentifier);
    CHECK_THROWS_AS(parse_value("1/(x-x)", spec), EvaluationError);
}

TEST_CASE("parse: fuzz corpus never crashes") {
    TowerSpec spec = tower_depth3();
    Rng rng(151);
    const std::string alphabet = "xt123+-*/^() expin_";
    for (int i = 0; i < 300; ++i) {
        std::string s;
        int len = rng.uniform(1, 24);
        for (int k = 0; k < len; ++k)
            s += alphabet[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(alphabet.size()) - 1))];
        try {
            (void)parse_value(s, spec);
        } catch (const Error&) {
            // any library error is fine; crashes are not
        }
    }
}

TEST_CASE("plain format round-trips on random elements") {
    TowerSpec spec = tower_depth3();
    Rng rng(157);
    for (int i = 0; i < 100; ++i) {
        Value f = random_value(rng, rng.uniform(-1, 3), 2, 3);
        std::string s = to_plain(f, spec);
        CHECK(parse_value(s, spec) == f);
    }
}

TEST_CASE("json round-trips") {
    TowerSpec spec = tower_depth3();
    Rng rng(163);
    for (int i = 0; i < 25; ++i) {
        Value f = random_value(rng, rng.uniform(-1, 3), 2, 2);
        json doc = value_to_json(f, spec);
        json reparsed = json::parse(doc.dump());
        CHECK(value_from_json(reparsed) == f);
    }
    // decomposition documents
    Value f = V("-(x-1)*t1/t2 + t3/(1+t2)^2 + x/(t3+x)^2", spec);
    AdditiveDecomposition d = ad_rht(f, spec);
    AdditiveDecomposition d2 = decomposition_from_json(json::parse(decomposition_to_json(d, spec).dump()));
    CHECK(d2.g == d.g);
    CHECK(d2.remainder == d.remainder);
    CHECK(same_remainder(d, d2));
    // integral documents
    TowerSpec e11 = tower_example11();
    Value g = V("(x^3-x-3)*t1/((x^3-x-2)*(t1+t2))", e11);
    IntegralExpression e = integrate(g, e11);
    IntegralExpression e2 = integral_from_json(json::parse(integral_to_json(e, e11).dump()));
    CHECK(e2.derivative_part == e.derivative_part);
    REQUIRE(e2.logs.entries.size() == e.logs.entries.size());
    CHECK(e2.logs.entries[0].argument == e.logs.entries[0].argument);
    REQUIRE(e2.logs.root_sums.size() == 1);
    CHECK(e2.logs.root_sums[0].defining == e.logs.root_sums[0].defining);
    CHECK(e2.logs.root_sums[0].coefficient == e.logs.root_sums[0].coefficient);
    CHECK(verify_integral(e2, g, e11));
}

TEST_CASE("latex output matches the display conventions") {
    TowerSpec spec = tower_example11();
    Value f = V("(x^3-x-3)*t1/((x^3-x-2)*(t1+t2))", spec);
    IntegralExpression e = integrate(f, spec);
    std::string latex = format_integral(e, spec, OutputFormat::latex).body;
    CHECK(latex.find("\\sum_{\\alpha^3-\\alpha-2=0}") != std::string::npos);
    CHECK(latex.find("\\log") != std::string::npos);
    CHECK(to_latex(V("t1/(x+1)", spec), spec) == "\\frac{1}{x+1} t_{1}");
}

TEST_CASE("cli: decompose and integrate") {
    std::ostringstream out, err;
    int rc = run_cli({"integrate", "--tower", "t1=exp(x); t2=exp(int(1/(x^3-x-2)))", "--expr",
                      "(x^3-x-3)*t1/((x^3-x-2)*(t1+t2))"},
                     out, err);
    CHECK(rc == 0);
    CHECK(out.str().find("log(t2 + t1)") != std::string::npos);

    out.str("");
    rc = run_cli({"decompose", "--tower", "t1=exp(x); t2=exp(x^2/2); t3=exp(-1/x)", "--expr",
                  "-(x-1)*t1/t2 + t3/(1+t2)^2 + x/(t3+x)^2", "--format", "json"},
                 out, err);
    CHECK(rc == 0);
    json doc = json::parse(out.str());
    CHECK(doc.at("kind") == "additive_decomposition");
    CHECK(doc.at("result").at("remainder_is_zero") == false);
}

TEST_CASE("cli: reduce and kernel subcommands") {
    std::ostringstream out, err;
    int rc = run_cli({"reduce", "--tower", "y=exp(x); t=exp(x^2/2)", "--direction", "y/(t-x)",
                      "--expr", "x/(t+1)^2", "--level", "2"},
                     out, err);
    CHECK(rc == 0);
    CHECK(out.str().find("h = ") != std::string::npos);

    out.str("");
    rc = run_cli({"kernel", "--tower", "t=exp(int(1/(x^2+1)))", "--expr",
                  "(x^3*t+x^2*t+2*x*t+t+1)/((x*t+1)*(x^2+1))", "--mode", "weak", "--seed", "7"},
                 out, err);
    CHECK(rc == 0);
    CHECK(out.str().find("kernel = ") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
    std::ostringstream out, err;
    // malformed expression: 2
    CHECK(run_cli({"decompose", "--tower", "t1=exp(x)", "--expr", "x+"}, out, err) == 2);
    // a declaration that is not an exp form is an unsupported tower: 3
    CHECK(run_cli({"decompose", "--tower", "t1=x", "--expr", "x"}, out, err) == 3);
    // unknown option: 2
    CHECK(run_cli({"decompose", "--nope", "x"}, out, err) == 2);
    // unsupported tower for decomposition: 3 (generator over a generator)
    CHECK(run_cli({"decompose", "--tower", "t1=exp(x); t2=exp(t1)", "--expr", "x"}, out, err) == 3);
    // missing required expr: 2
    CHECK(run_cli({"integrate", "--tower", "t1=exp(x)"}, out, err) == 2);
}
