#pragma once

// OutputDocument rendering: plain (re-parseable element grammar), LaTeX
// (paper-style logs and root sums), and JSON (see json_io.hpp).

#include <string>

#include "hyperred/json_io.hpp"

namespace hyperred {

enum class OutputFormat { plain, latex, json_doc };

struct OutputDocument {
    OutputFormat format;
    std::string body;
};

inline OutputFormat output_format_from_string(const std::string& s) {
    if (s == "plain") return OutputFormat::plain;
    if (s == "latex") return OutputFormat::latex;
    if (s == "json") return OutputFormat::json_doc;
    throw EvaluationError("unknown output format '" + s + "'");
}

namespace detail_fmt {

// compact LaTeX for the defining polynomial in alpha, e.g. \alpha^3-\alpha-2
inline std::string qpoly_alpha_latex(const QPoly& m) {
    std::string out;
    for (int k = m.deg(); k >= 0; --k) {
        Rational c = m.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = abs(c);
        std::string body;
        std::string vpart = k == 0 ? "" : (k == 1 ? "\\alpha" : "\\alpha^" + std::to_string(k));
        if (k == 0) body = to_string(a);
        else if (a == 1) body = vpart;
        else body = to_string(a) + vpart;
        if (out.empty()) out = (neg ? "-" : "") + body;
        else out += (neg ? "-" : "+") + body;
    }
    return out.empty() ? "0" : out;
}

inline std::string qpoly_alpha_plain(const QPoly& m) {
    std::string out;
    for (int k = m.deg(); k >= 0; --k) {
        Rational c = m.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = abs(c);
        std::string vpart = k == 0 ? "" : (k == 1 ? "a" : "a^" + std::to_string(k));
        std::string body;
        if (k == 0) body = to_string(a);
        else if (a == 1) body = vpart;
        else body = to_string(a) + "*" + vpart;
        if (out.empty()) out = (neg ? "-" : "") + body;
        else out += (neg ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

inline std::string alg_rep_plain(const AlgRep& rep, const TowerSpec& spec) {
    if (rep.is_zero()) return "0";
    std::string out;
    for (int k = rep.deg(); k >= 0; --k) {
        Value c = rep.coeff(k);
        if (c.is_zero()) continue;
        std::string vpart = k == 0 ? "" : (k == 1 ? "a" : "a^" + std::to_string(k));
        std::string cs = to_plain(c, spec);
        std::string body;
        if (k == 0) body = cs;
        else if (c.is_one()) body = vpart;
        else body = "(" + cs + ")*" + vpart;
        if (out.empty()) out = body;
        else out += " + " + body;
    }
    return out;
}

inline std::string alg_rep_latex(const AlgRep& rep, const TowerSpec& spec) {
    if (rep.is_zero()) return "0";
    std::string out;
    for (int k = rep.deg(); k >= 0; --k) {
        Value c = rep.coeff(k);
        if (c.is_zero()) continue;
        std::string vpart = k == 0 ? "" : (k == 1 ? "\\alpha" : "\\alpha^" + std::to_string(k));
        std::string cs = to_latex(c, spec);
        std::string body;
        if (k == 0) body = cs;
        else if (c.is_one()) body = vpart;
        else body = "\\left(" + cs + "\\right)" + vpart;
        if (out.empty()) out = body;
        else out += "+" + body;
    }
    return out;
}

} // namespace detail_fmt

inline OutputDocument format_value(const Value& v, const TowerSpec& spec, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::plain: return {fmt, to_plain(v, spec)};
        case OutputFormat::latex: return {fmt, to_latex(v, spec)};
        case OutputFormat::json_doc: return {fmt, value_to_json(v, spec).dump(2)};
    }
    throw InternalError("unhandled format");
}

inline OutputDocument format_decomposition(const AdditiveDecomposition& d, const TowerSpec& spec,
                                           OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::plain: {
            std::string body = "g = " + to_plain(d.g, spec) + "\n";
            body += "remainder = " + to_plain(d.remainder, spec) + "\n";
            body += d.remainder_is_zero() ? "f is a derivative in the tower\n"
                                          : "f is not a derivative in the tower\n";
            return {fmt, body};
        }
        case OutputFormat::latex: {
            std::string body = "f=\\left(" + to_latex(d.g, spec) + "\\right)'+" + to_latex(d.remainder, spec);
            return {fmt, body};
        }
        case OutputFormat::json_doc: return {fmt, decomposition_to_json(d, spec).dump(2)};
    }
    throw InternalError("unhandled format");
}

inline OutputDocument format_integral(const IntegralExpression& e, const TowerSpec& spec,
                                      OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::plain: {
            std::string body;
            if (!e.elementary()) {
                body += "no elementary integral over the tower\n";
                body += "derivative part = " + to_plain(e.derivative_part, spec) + "\n";
                body += "remainder = " + to_plain(e.non_elementary_remainder, spec) + "\n";
                return {fmt, body};
            }
            body += "integral = " + to_plain(e.derivative_part, spec);
            for (const auto& entry : e.logs.entries) {
                body += "\n  + " + to_string(entry.residue) + "*log(" + to_plain(entry.argument, spec) + ")";
            }
            for (const auto& rs : e.logs.root_sums) {
                body += "\n  + sum[" + detail_fmt::qpoly_alpha_plain(rs.defining) + " = 0] (" +
                        detail_fmt::alg_rep_plain(rs.coefficient, spec) + ")*log(" +
                        detail_fmt::alg_rep_plain(rs.argument, spec) + ")";
            }
            body += "\n";
            return {fmt, body};
        }
        case OutputFormat::latex: {
            if (!e.elementary())
                return {fmt, "\\text{no elementary integral; remainder } " +
                                 to_latex(e.non_elementary_remainder, spec)};
            std::string body = "\\int f = " + to_latex(e.derivative_part, spec);
            for (const auto& entry : e.logs.entries) {
                std::string c = entry.residue == 1 ? "" : to_string(entry.residue);
                body += "+" + c + "\\log\\left(" + to_latex(entry.argument, spec) + "\\right)";
            }
            for (const auto& rs : e.logs.root_sums) {
                body += "+\\sum_{" + detail_fmt::qpoly_alpha_latex(rs.defining) + "=0}" +
                        detail_fmt::alg_rep_latex(rs.coefficient, spec) + "\\log\\left(" +
                        detail_fmt::alg_rep_latex(rs.argument, spec) + "\\right)";
            }
            return {fmt, body};
        }
        case OutputFormat::json_doc: return {fmt, integral_to_json(e, spec).dump(2)};
    }
    throw InternalError("unhandled format");
}

inline OutputDocument format_kernel_shell(const KernelShell& ks, const TowerSpec& spec, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::plain:
            return {fmt, "kernel = " + to_plain(ks.kernel, spec) + "\nshell  = " + to_plain(ks.shell, spec) + "\n"};
        case OutputFormat::latex:
            return {fmt, "\\xi=" + to_latex(ks.kernel, spec) + ",\\quad \\eta=" + to_latex(ks.shell, spec)};
        case OutputFormat::json_doc: return {fmt, kernel_shell_to_json(ks, spec).dump(2)};
    }
    throw InternalError("unhandled format");
}

inline OutputDocument format_certificate(const ReductionCertificate& c, const TowerSpec& spec,
                                         OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::plain: {
            std::string body = "a = " + to_plain(c.a, spec) + "\n";
            body += "h = " + to_plain(c.h, spec) + "\n";
            body += "residue term = " + to_plain(certificate_residue(c), spec) + "\n";
            return {fmt, body};
        }
        case OutputFormat::latex:
            return {fmt, "g=a'+af+h+\\frac{r}{\\operatorname{den}(f)},\\quad a=" + to_latex(c.a, spec) +
                             ",\\ h=" + to_latex(c.h, spec) + ",\\ r=" + to_latex(c.r, spec)};
        case OutputFormat::json_doc: return {fmt, certificate_to_json(c, spec).dump(2)};
    }
    throw InternalError("unhandled format");
}

} // namespace hyperred
