#pragma once

// Command-line front end.  Exit codes: 0 success, 2 parse/validation error,
// 3 unsupported tower/case (including the degree guard), 4 internal
// invariant violation.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperred/format.hpp"
#include "hyperred/vf_membership.hpp"

namespace hyperred {

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperred - reductions and elementary integration in hyperexponential towers"};
    app.require_subcommand(1);

    std::string tower_decls, expr_text, direction_text, format_name = "plain", mode_name = "weak";
    int level = -1;
    std::uint64_t seed = default_seed;

    auto add_common = [&](CLI::App* cmd, bool needs_expr) {
        cmd->add_option("--tower", tower_decls, "generator declarations, e.g. \"t1=exp(x); t2=exp(x^2/2)\"");
        if (needs_expr) cmd->add_option("--expr", expr_text, "expression over x and the generators")->required();
        cmd->add_option("--format", format_name, "plain | latex | json");
        cmd->add_option("--seed", seed, "seed for randomized evaluation points");
    };

    CLI::App* decompose = app.add_subcommand("decompose", "additive decomposition f = g' + r");
    add_common(decompose, true);
    CLI::App* integrate_cmd = app.add_subcommand("integrate", "decide and construct an elementary integral");
    add_common(integrate_cmd, true);
    CLI::App* reduce = app.add_subcommand("reduce", "kernel-shell reduction of g along a direction f");
    add_common(reduce, true);
    reduce->add_option("--direction", direction_text, "the weakly normalized direction f")->required();
    reduce->add_option("--level", level, "the monomial extension level to reduce in")->required();
    CLI::App* kernel = app.add_subcommand("kernel", "weakly normalized or normalized kernel and shell");
    add_common(kernel, true);
    kernel->add_option("--mode", mode_name, "weak | normalized");
    kernel->add_option("--level", level, "extension level (default: top of the tower)");

    try {
        std::vector<const char*> argv;
        argv.push_back("hyperred");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        TowerSpec spec = build_tower_from_string(tower_decls);
        OutputFormat fmt = output_format_from_string(format_name);

        if (app.got_subcommand(decompose)) {
            Value f = parse_value(expr_text, spec);
            AdditiveDecomposition d = ad_rht(f, spec);
            out << format_decomposition(d, spec, fmt).body << "\n";
            return 0;
        }
        if (app.got_subcommand(integrate_cmd)) {
            Value f = parse_value(expr_text, spec);
            IntegralExpression e = integrate(f, spec);
            out << format_integral(e, spec, fmt).body << "\n";
            return 0;
        }
        if (app.got_subcommand(reduce)) {
            if (level < 0 || level > spec.depth())
                throw EvaluationError("--level must name a tower level");
            Value f = parse_value(direction_text, spec);
            Value g = parse_value(expr_text, spec);
            if (!is_weakly_normalized(f, spec, level, KernelMode::weak, seed).ok)
                throw NotWeaklyNormalized("the direction is not weakly normalized; run `hyperred kernel` first");
            ReductionCertificate cert = gksr(f, g, spec, level, false);
            out << format_certificate(cert, spec, fmt).body << "\n";
            return 0;
        }
        if (app.got_subcommand(kernel)) {
            Value f = parse_value(expr_text, spec);
            int lvl = level >= 0 ? level : spec.depth();
            KernelMode mode;
            if (mode_name == "weak") mode = KernelMode::weak;
            else if (mode_name == "normalized") mode = KernelMode::normalized;
            else throw EvaluationError("unknown mode '" + mode_name + "'");
            KernelShell ks = gks(f, spec, lvl, mode, seed);
            out << format_kernel_shell(ks, spec, fmt).body << "\n";
            return 0;
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const UnsupportedTower& e) {
        err << "unsupported tower: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedCase& e) { // includes MaxDegreeExceeded
        err << "unsupported case: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedField& e) {
        err << "unsupported field: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) { // syntax, validation, preconditions
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace hyperred
