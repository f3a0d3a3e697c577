#pragma once

// JSON serialization (schema version 1).  Top level:
//   { "kind": "...", "version": 1, "tower": [...], "result": {...} }
// Element values are carried as exact plain-format strings; rationals print
// as "p/q".  Every document round-trips through the matching from_json_*.

#include <string>

#include <json.hpp>

#include "hyperred/ad_rht.hpp"
#include "hyperred/elementary.hpp"
#include "hyperred/kernel_shell.hpp"
#include "hyperred/parse.hpp"
#include "hyperred/printing.hpp"
#include "hyperred/reductions.hpp"

namespace hyperred {

using json = nlohmann::json;

inline json tower_to_json(const TowerSpec& spec) {
    json arr = json::array();
    for (int i = 1; i <= spec.depth(); ++i) {
        const Generator& g = spec.gen(i);
        arr.push_back({{"name", g.name},
                       {"logDerivative", to_plain(g.sigma, spec)},
                       {"form", g.declared_form}});
    }
    return arr;
}

inline TowerSpec tower_from_json(const json& arr) {
    TowerSpec spec;
    for (const auto& item : arr) {
        Generator g;
        g.name = item.at("name").get<std::string>();
        g.sigma = parse_value(item.at("logDerivative").get<std::string>(), spec);
        g.declared_form = item.value("form", std::string());
        spec.generators.push_back(std::move(g));
    }
    spec.validate();
    return spec;
}

inline json alg_rep_to_json(const AlgRep& rep, const TowerSpec& spec) {
    json arr = json::array();
    for (int k = 0; k <= rep.deg(); ++k) arr.push_back(to_plain(rep.coeff(k), spec));
    return arr;
}

inline AlgRep alg_rep_from_json(const json& arr, const TowerSpec& spec) {
    AlgRep rep;
    for (const auto& item : arr) rep.c.push_back(parse_value(item.get<std::string>(), spec));
    rep.trim();
    return rep;
}

inline json qpoly_to_json(const QPoly& p) {
    json arr = json::array();
    for (int k = 0; k <= p.deg(); ++k) arr.push_back(to_string(p.coeff(k)));
    return arr;
}

inline QPoly qpoly_from_json(const json& arr) {
    QPoly p;
    for (const auto& item : arr) p.c.push_back(rat_from_string(item.get<std::string>()));
    p.trim();
    return p;
}

// ---- documents -------------------------------------------------------------------

inline json document(const std::string& kind, const TowerSpec& spec, json result) {
    return json{{"kind", kind}, {"version", 1}, {"tower", tower_to_json(spec)}, {"result", std::move(result)}};
}

inline json value_to_json(const Value& v, const TowerSpec& spec) {
    return document("tower_element", spec, json{{"value", to_plain(v, spec)}});
}

inline Value value_from_json(const json& doc) {
    TowerSpec spec = tower_from_json(doc.at("tower"));
    return parse_value(doc.at("result").at("value").get<std::string>(), spec);
}

inline json decomposition_to_json(const AdditiveDecomposition& d, const TowerSpec& spec) {
    json terms = json::array();
    for (const auto& t : d.terms) {
        json entry{{"level", t.level}, {"exponents", t.exponents}, {"coefficient", to_plain(t.coeff, spec)}};
        if (t.residual) {
            entry["residual"] = json{{"simple", to_plain(t.residual->simple, spec)},
                                     {"poly", to_plain(t.residual->poly, spec)},
                                     {"kernel", to_plain(t.residual->xi, spec)},
                                     {"shell", to_plain(t.eta, spec)}};
        }
        terms.push_back(std::move(entry));
    }
    return document("additive_decomposition", spec,
                    json{{"g", to_plain(d.g, spec)},
                         {"remainder", to_plain(d.remainder, spec)},
                         {"remainder_is_zero", d.remainder_is_zero()},
                         {"terms", std::move(terms)}});
}

inline AdditiveDecomposition decomposition_from_json(const json& doc) {
    TowerSpec spec = tower_from_json(doc.at("tower"));
    const json& res = doc.at("result");
    AdditiveDecomposition d;
    d.depth = spec.depth();
    d.g = parse_value(res.at("g").get<std::string>(), spec);
    d.remainder = parse_value(res.at("remainder").get<std::string>(), spec);
    for (const auto& entry : res.at("terms")) {
        RemainderTerm t;
        t.level = entry.at("level").get<int>();
        t.exponents = entry.at("exponents").get<std::vector<int>>();
        t.coeff = parse_value(entry.at("coefficient").get<std::string>(), spec);
        if (entry.contains("residual")) {
            ResidualForm rf;
            rf.simple = parse_value(entry["residual"].at("simple").get<std::string>(), spec);
            rf.xi = parse_value(entry["residual"].at("kernel").get<std::string>(), spec);
            Value poly_v = parse_value(entry["residual"].at("poly").get<std::string>(), spec);
            rf.poly = poly_v.is_zero() ? poly_zero(0) : num_at(poly_v, 0);
            t.residual = rf;
            t.eta = parse_value(entry["residual"].at("shell").get<std::string>(), spec);
        }
        d.terms.push_back(std::move(t));
    }
    return d;
}

inline json integral_to_json(const IntegralExpression& e, const TowerSpec& spec) {
    json logs = json::array();
    for (const auto& entry : e.logs.entries)
        logs.push_back({{"residue", to_string(entry.residue)}, {"argument", to_plain(entry.argument, spec)}});
    json sums = json::array();
    for (const auto& rs : e.logs.root_sums)
        sums.push_back({{"defining", qpoly_to_json(rs.defining)},
                        {"coefficient", alg_rep_to_json(rs.coefficient, spec)},
                        {"argument", alg_rep_to_json(rs.argument, spec)}});
    return document("integral_expression", spec,
                    json{{"derivative_part", to_plain(e.derivative_part, spec)},
                         {"logs", std::move(logs)},
                         {"root_sums", std::move(sums)},
                         {"elementary", e.elementary()},
                         {"non_elementary_remainder", to_plain(e.non_elementary_remainder, spec)}});
}

inline IntegralExpression integral_from_json(const json& doc) {
    TowerSpec spec = tower_from_json(doc.at("tower"));
    const json& res = doc.at("result");
    IntegralExpression e;
    e.derivative_part = parse_value(res.at("derivative_part").get<std::string>(), spec);
    e.non_elementary_remainder = parse_value(res.at("non_elementary_remainder").get<std::string>(), spec);
    for (const auto& item : res.at("logs"))
        e.logs.entries.push_back({rat_from_string(item.at("residue").get<std::string>()),
                                  parse_value(item.at("argument").get<std::string>(), spec)});
    for (const auto& item : res.at("root_sums"))
        e.logs.root_sums.push_back({qpoly_from_json(item.at("defining")),
                                    alg_rep_from_json(item.at("coefficient"), spec),
                                    alg_rep_from_json(item.at("argument"), spec)});
    return e;
}

inline json kernel_shell_to_json(const KernelShell& ks, const TowerSpec& spec) {
    return document("kernel_shell", spec,
                    json{{"kernel", to_plain(ks.kernel, spec)},
                         {"shell", to_plain(ks.shell, spec)},
                         {"mode", ks.mode == KernelMode::weak ? "weak" : "normalized"}});
}

inline json certificate_to_json(const ReductionCertificate& c, const TowerSpec& spec) {
    return document("reduction_certificate", spec,
                    json{{"a", to_plain(c.a, spec)},
                         {"h", to_plain(c.h, spec)},
                         {"r", to_plain(c.r, spec)},
                         {"direction", to_plain(c.f, spec)},
                         {"level", c.level},
                         {"residue_term", to_plain(certificate_residue(c), spec)}});
}

} // namespace hyperred
