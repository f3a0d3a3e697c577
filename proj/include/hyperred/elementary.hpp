#pragma once

// Residue machinery and elementary integration over rationally
// hyperexponential towers: Rothstein-Trager resultants, the constant-residue
// test, the elementary-integrability criterion on remainders, and the
// construction of integrals as derivative part + logarithms + formal root
// sums.

#include <optional>
#include <string>
#include <vector>

#include "hyperred/ad_rht.hpp"
#include "hyperred/algext.hpp"

namespace hyperred {

// c * log(argument) with a rational residue c
struct LogEntry {
    Rational residue;
    Value argument;
};

// sum over the roots alpha of `defining` of coefficient(alpha) * log(argument(alpha));
// alpha-polynomials carry tower-element coefficients
struct RootSum {
    QPoly defining;      // monic irreducible over Q
    AlgRep coefficient;  // element of F[alpha]/(defining)
    AlgRep argument;     // likewise; for level-0 sums this is x - alpha
};

struct LogPart {
    std::vector<LogEntry> entries;
    std::vector<RootSum> root_sums;

    bool empty() const { return entries.empty() && root_sums.empty(); }
};

struct IntegralExpression {
    Value derivative_part;
    LogPart logs;
    Value non_elementary_remainder; // zero when the integral is elementary

    bool elementary() const { return non_elementary_remainder.is_zero(); }
};

// ---- residues -------------------------------------------------------------------

// R(z) = res_t(num(h) - z den(h)', den(h)); requires den(h) nontrivially normal
inline ParamPoly rothstein_trager_resultant(const Value& h, const TowerSpec& spec, int level) {
    Poly den = den_at(h, level);
    if (den.deg() < 1) throw PreconditionViolated("element has no nontrivial denominator");
    Poly dden = derive_poly(den, spec);
    if (poly_gcd(den, dden).deg() != 0)
        throw PreconditionViolated("denominator is not normal");
    Poly num = num_at(h, level);
    ZLinPoly a{{num, -dden}};
    ZLinPoly b{{den}};
    return resultant_param(a, b);
}

struct ResidueData {
    bool constant;               // all residues lie in the algebraic closure of Q
    QPoly rbar;                  // monic squarefree polynomial over Q whose roots are the residues
    std::vector<QFactor> factors; // Q-irreducible factors of rbar
};

inline ResidueData residues_constant(const Value& h, const TowerSpec& spec, int level) {
    if (h.is_zero()) return {true, QPoly::constant(Rational(1)), {}};
    ParamPoly r = rothstein_trager_resultant(h, spec, level);
    if (r.is_zero()) throw InternalError("vanishing Rothstein-Trager resultant");
    ParamPoly g = ugcd(r, uderiv(r));
    ParamPoly s = g.deg() > 0 ? uquo(r, g) : r;
    s = umonic(s);
    QPoly rbar;
    for (const auto& c : s.c) {
        if (!c.is_rational()) return {false, {}, {}};
        rbar.c.push_back(c.rational());
    }
    rbar.trim();
    auto f = factor_rational_poly(rbar);
    return {true, rbar, f.factors};
}

// ---- the elementary criterion -----------------------------------------------------

struct ElementaryDiagnosis {
    bool elementary = true;
    std::vector<std::string> reasons;
};

inline ElementaryDiagnosis elementary_test(const AdditiveDecomposition& decomp, const TowerSpec& spec) {
    ElementaryDiagnosis out;
    for (const auto& term : decomp.terms) {
        bool t_is_one = true;
        for (int e : term.exponents)
            if (e != 0) t_is_one = false;
        std::string pi = "pi_" + std::to_string(term.level) + "(r)";
        if (!t_is_one) {
            out.elementary = false;
            if (term.level == 0)
                out.reasons.push_back(pi + " keeps a residual term with a nontrivial power product, so it does not lie in F_0");
            else
                out.reasons.push_back(pi + " has a term with a nontrivial power product, so it is not t_" +
                                      std::to_string(term.level) + "-simple");
            continue;
        }
        if (term.level == 0) continue; // the lone term is x-simple by construction
        ResidueData rd = residues_constant(term.coeff, spec, term.level);
        if (!rd.constant) {
            out.elementary = false;
            out.reasons.push_back(pi + " has residues outside the algebraic closure of Q");
        }
    }
    return out;
}

// ---- integral construction ----------------------------------------------------------

namespace detail_elem {

// derivative of sum over roots: sum_alpha coefficient(alpha) * arg'(alpha)/arg(alpha)
inline Value root_sum_derivative(const RootSum& rs, const TowerSpec& spec) {
    AlgebraicExtension ext(rs.defining);
    AlgRep darg = alg_derive(rs.argument, spec);
    AlgRep s = alg_mul(ext, alg_mul(ext, rs.coefficient, darg), alg_inv(ext, rs.argument));
    return alg_trace_sum(ext, s);
}

} // namespace detail_elem

inline Value log_part_derivative(const LogPart& logs, const TowerSpec& spec) {
    Value d(0);
    for (const auto& e : logs.entries) d = d + Value(e.residue) * derive(e.argument, spec) / e.argument;
    for (const auto& rs : logs.root_sums) d = d + detail_elem::root_sum_derivative(rs, spec);
    return d;
}

inline bool verify_integral(const IntegralExpression& expr, const Value& f, const TowerSpec& spec) {
    Value back = derive(expr.derivative_part, spec) + log_part_derivative(expr.logs, spec) +
                 expr.non_elementary_remainder;
    return back == f;
}

inline IntegralExpression integrate(const Value& f, const TowerSpec& spec) {
    AdditiveDecomposition decomp = ad_rht(f, spec);
    ElementaryDiagnosis diag = elementary_test(decomp, spec);
    if (!diag.elementary) return {decomp.g, {}, decomp.remainder};

    IntegralExpression out{decomp.g, {}, Value(0)};
    Value level0_pool(0);

    for (const auto& term : decomp.terms) {
        if (term.level == 0) {
            level0_pool = level0_pool + term.coeff;
            continue;
        }
        int lvl = term.level;
        Value running = term.coeff;
        Poly num = num_at(term.coeff, lvl);
        Poly den = den_at(term.coeff, lvl);
        Poly dden = derive_poly(den, spec);
        ResidueData rd = residues_constant(term.coeff, spec, lvl);
        for (const auto& qf : rd.factors) {
            if (qf.factor.deg() == 1) {
                Rational c = -qf.factor.coeff(0);
                if (c == 0) continue;
                Poly arg = poly_gcd(num - scale(dden, Value(c)), den);
                if (arg.deg() < 1) continue;
                Value argv = value_from_poly(arg);
                out.logs.entries.push_back({c, argv});
                running = running - Value(c) * derive(argv, spec) / argv;
            } else {
                AlgebraicExtension ext(qf.factor);
                AlgPoly lhs = algp_sub(algp_lift(num), algp_scale(ext, algp_lift(dden), alg_alpha()));
                AlgPoly arg = algp_gcd(ext, lhs, algp_lift(den));
                if (arg.deg() < 1) continue;
                RootSum rs{qf.factor, alg_alpha(), algp_transpose(arg)};
                running = running - detail_elem::root_sum_derivative(rs, spec);
                out.logs.root_sums.push_back(std::move(rs));
            }
        }
        if (running.level() > 0)
            throw InternalError("log construction leftover did not drop to Q(x)");
        level0_pool = level0_pool + running;
    }

    // level-0 pipeline: Hermite-Ostrogradsky, then logarithms over Q-bar in
    // pole-sum form (defining polynomial = irreducible factor of the
    // denominator, coefficient = the residue as a function of the root)
    HermiteResult hr = hermite_ostrogradsky(level0_pool);
    out.derivative_part = out.derivative_part + hr.u;
    if (!hr.v.is_zero()) {
        Poly num0 = num_at(hr.v, 0);
        Poly den0 = den_at(hr.v, 0);
        Poly dden0 = d_dvar(den0);
        QPoly den_q;
        for (const auto& c : den0.c) den_q.c.push_back(c.rational());
        den_q.trim();
        for (const auto& qf : factor_rational_poly(den_q).factors) {
            if (qf.factor.deg() == 1) {
                Rational root = -qf.factor.coeff(0);
                Value num_v = eval_poly(num0, Value(root));
                Value den_v = eval_poly(dden0, Value(root));
                if (!num_v.is_rational() || !den_v.is_rational())
                    throw InternalError("rational residue expected at a rational pole");
                Rational residue = num_v.rational() / den_v.rational();
                Value arg = value_from_poly(poly_var(0)) - Value(root);
                out.logs.entries.push_back({residue, arg});
            } else {
                AlgebraicExtension ext(qf.factor);
                auto to_rep = [&](const Poly& p) {
                    AlgRep r;
                    for (const auto& c : p.c) r.c.push_back(c);
                    r.trim();
                    return alg_reduce(ext, r);
                };
                AlgRep coeff = alg_mul(ext, to_rep(num0), alg_inv(ext, to_rep(dden0)));
                AlgRep arg{{value_from_poly(poly_var(0)), Value(-1)}}; // x - alpha
                out.logs.root_sums.push_back({qf.factor, coeff, arg});
            }
        }
    }
    return out;
}

} // namespace hyperred
