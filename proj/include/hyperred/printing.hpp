#pragma once

// Plain (re-parseable) and LaTeX formatting of tower elements.

#include <cctype>
#include <string>

#include "hyperred/tower.hpp"
#include "hyperred/value.hpp"

namespace hyperred {

inline std::string var_name(const TowerSpec& spec, int var) {
    return var == 0 ? std::string("x") : spec.gen(var).name;
}

namespace detail_print {

struct Piece {
    std::string text;
    bool factor_safe; // usable as a factor of a product without parentheses
};

inline Piece value_plain(const Value& v, const TowerSpec& spec);

inline std::string as_factor(const Piece& p) {
    return p.factor_safe ? p.text : "(" + p.text + ")";
}

inline Piece poly_plain(const Poly& p, const TowerSpec& spec) {
    if (p.is_zero()) return {"0", true};
    std::string name = var_name(spec, p.var);
    std::string out;
    int printed = 0;
    bool single_safe = false;
    for (int k = p.deg(); k >= 0; --k) {
        Value c = coeff(p, k);
        if (c.is_zero()) continue;
        bool negative = false;
        if (c.is_rational() && c.rational() < 0) {
            negative = true;
            c = -c;
        }
        std::string body;
        std::string vpart = k == 0 ? "" : (k == 1 ? name : name + "^" + std::to_string(k));
        if (k == 0) {
            Piece cp = value_plain(c, spec);
            body = as_factor(cp);
            single_safe = cp.factor_safe;
        } else if (c.is_one()) {
            body = vpart;
            single_safe = true;
        } else {
            Piece cp = value_plain(c, spec);
            body = as_factor(cp) + "*" + vpart;
            single_safe = true;
        }
        if (printed == 0) {
            out = (negative ? "-" : "") + body;
            if (negative) single_safe = false;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
        ++printed;
    }
    return {out, printed == 1 && single_safe};
}

inline Piece value_plain(const Value& v, const TowerSpec& spec) {
    if (v.is_rational()) {
        std::string s = to_string(v.rational());
        return {s, v.rational() >= 0};
    }
    const Frac& f = v.frac();
    Piece num = poly_plain(f.num, spec);
    if (f.den.deg() == 0) return num;
    Piece den = poly_plain(f.den, spec);
    return {as_factor(num) + "/" + as_factor(den), true};
}

// ---- LaTeX ------------------------------------------------------------------------

inline std::string latex_name(const std::string& name) {
    std::size_t i = name.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
    if (i == 0 || i == name.size()) return name;
    return name.substr(0, i) + "_{" + name.substr(i) + "}";
}

inline std::string value_latex(const Value& v, const TowerSpec& spec);

inline std::string poly_latex(const Poly& p, const TowerSpec& spec) {
    if (p.is_zero()) return "0";
    std::string name = p.var == 0 ? "x" : latex_name(spec.gen(p.var).name);
    std::string out;
    int printed = 0;
    for (int k = p.deg(); k >= 0; --k) {
        Value c = coeff(p, k);
        if (c.is_zero()) continue;
        bool negative = false;
        if (c.is_rational() && c.rational() < 0) {
            negative = true;
            c = -c;
        }
        std::string vpart = k == 0 ? "" : (k == 1 ? name : name + "^{" + std::to_string(k) + "}");
        std::string body;
        if (k == 0) {
            body = value_latex(c, spec);
        } else if (c.is_one()) {
            body = vpart;
        } else {
            std::string cs = value_latex(c, spec);
            bool wrap = !c.is_rational() && c.frac().den.deg() == 0 && c.frac().num.deg() >= 1;
            body = (wrap ? "\\left(" + cs + "\\right)" : cs) + " " + vpart;
        }
        if (printed == 0) out = (negative ? "-" : "") + body;
        else out += (negative ? "-" : "+") + body;
        ++printed;
    }
    return out;
}

inline std::string value_latex(const Value& v, const TowerSpec& spec) {
    if (v.is_rational()) {
        const Rational& r = v.rational();
        if (is_integer(r)) return to_string(r);
        std::string sign = r < 0 ? "-" : "";
        Rational a = abs(r);
        return sign + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    }
    const Frac& f = v.frac();
    if (f.den.deg() == 0) return poly_latex(f.num, spec);
    return "\\frac{" + poly_latex(f.num, spec) + "}{" + poly_latex(f.den, spec) + "}";
}

} // namespace detail_print

inline std::string to_plain(const Value& v, const TowerSpec& spec) {
    return detail_print::value_plain(v, spec).text;
}

inline std::string to_plain(const Poly& p, const TowerSpec& spec) {
    return detail_print::poly_plain(p, spec).text;
}

inline std::string to_latex(const Value& v, const TowerSpec& spec) {
    return detail_print::value_latex(v, spec);
}

} // namespace hyperred
