#include "qheun/io.hpp"

#include "qheun/errors.hpp"
#include "qheun/parser.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qheun {

namespace {

const char* kEqFormat = "qheun-eq/1";
const char* kParamsFormat = "qheun-params/1";
const char* kFamilyFormat = "qheun-family/1";
const char* kOdeFormat = "qheun-ode/1";

void expect_format(const json& doc, const char* fmt) {
    if (!doc.is_object()) throw InputError(std::string("expected a ") + fmt + " object");
    auto it = doc.find("format");
    if (it == doc.end() || !it->is_string() || it->get<std::string>() != fmt)
        throw InputError(std::string("document format is not ") + fmt);
}

std::string get_string(const json& v, const std::string& what) {
    if (!v.is_string()) throw InputError(what + " must be a string");
    return v.get<std::string>();
}

json poly_map(const UPoly& p) {
    json m = json::object();
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero()) m[std::to_string(k)] = p.coeff(k).str();
    return m;
}

UPoly poly_from_map(const json& m, const std::vector<std::string>& universe, const std::string& slot) {
    if (m.is_null()) return UPoly();
    if (!m.is_object()) throw InputError(slot + " must map degrees to expressions");
    std::vector<RatFun> c;
    for (auto& [deg, expr] : m.items()) {
        if (deg.size() != 1 || deg[0] < '0' || deg[0] > '3')
            throw InputError(slot + ": degree '" + deg + "' is not one of 0..3");
        std::size_t k = deg[0] - '0';
        if (c.size() <= k) c.resize(k + 1);
        c[k] = parse_expr(get_string(expr, slot + "[" + deg + "]"), universe);
    }
    return UPoly(c);
}

json qpoly_map(const QPoly& p) {
    json m = json::object();
    for (std::size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) m[std::to_string(k)] = p[k].str();
    return m;
}

json triple(const std::array<Rational, 3>& a) {
    json j = json::array();
    for (auto& r : a) j.push_back(r.str());
    return j;
}

}  // namespace

json equation_to_json(const QDiffEq& eq) {
    json params = json::array();
    for (Symbol s : eq.parameters())
        if (s.name() != eq.variable) params.push_back(s.name());
    json doc;
    doc["format"] = kEqFormat;
    doc["variable"] = eq.variable;
    doc["parameters"] = params;
    doc["convention"] = QDiffEq::convention;
    doc["P"] = poly_map(eq.P);
    doc["Z"] = poly_map(eq.Z);
    doc["M"] = poly_map(eq.M);
    return doc;
}

std::vector<std::string> declared_parameters(const json& doc) {
    expect_format(doc, kEqFormat);
    std::vector<std::string> out;
    auto it = doc.find("parameters");
    if (it == doc.end()) return out;
    if (!it->is_array()) throw InputError("parameters must be a list of identifiers");
    for (auto& p : *it) {
        std::string s = get_string(p, "parameter");
        if (!valid_identifier(s)) throw InputError("'" + s + "' is not an identifier");
        out.push_back(s);
    }
    return out;
}

QDiffEq equation_from_json(const json& doc) {
    std::vector<std::string> universe = declared_parameters(doc);
    std::string var = doc.contains("variable") ? get_string(doc["variable"], "variable") : "x";
    if (!valid_identifier(var)) throw InputError("'" + var + "' is not an identifier");
    if (doc.contains("convention") && get_string(doc["convention"], "convention") != QDiffEq::convention)
        throw InputError(std::string("convention must be \"") + QDiffEq::convention + "\"");
    auto slot = [&](const char* name) {
        return poly_from_map(doc.contains(name) ? doc[name] : json(), universe, name);
    };
    QDiffEq eq(slot("P"), slot("Z"), slot("M"), var);
    eq.validate();
    return eq;
}

json bindings_to_json(const Bindings& b) {
    std::map<std::string, std::string> sorted;
    for (auto& [s, v] : b) sorted[s.name()] = v.str();
    json doc;
    doc["format"] = kParamsFormat;
    doc["bindings"] = json::object();
    for (auto& [k, v] : sorted) doc["bindings"][k] = v;
    return doc;
}

Bindings bindings_from_json(const json& doc) {
    expect_format(doc, kParamsFormat);
    Bindings out;
    auto it = doc.find("bindings");
    if (it == doc.end()) return out;
    if (!it->is_object()) throw InputError("bindings must be an object");
    for (auto& [k, v] : it->items()) {
        if (!valid_identifier(k)) throw InputError("'" + k + "' is not an identifier");
        if (v.is_number()) throw InputError("binding '" + k + "' must be a string, not a JSON number");
        out[Symbol(k)] = Rational::parse(get_string(v, "binding '" + k + "'"));
    }
    return out;
}

void check_bindings(const Bindings& b, const std::vector<std::string>& allowed) {
    for (auto& [s, v] : b)
        if (std::find(allowed.begin(), allowed.end(), s.name()) == allowed.end())
            throw UnknownParameter(s.name());
}

std::map<Symbol, RatFun> as_ratfun(const Bindings& b) {
    std::map<Symbol, RatFun> out;
    for (auto& [s, v] : b) out[s] = RatFun(v);
    return out;
}

json family_to_json(const EpsilonFamily& f) {
    json doc;
    doc["format"] = kFamilyFormat;
    for (Sigma s : {Sigma::Minus, Sigma::Zero, Sigma::Plus}) {
        json row = json::object();
        for (int k = 0; k < 3; ++k)
            if (!f.at(s, k).is_zero()) row[std::to_string(k)] = f.at(s, k).str();
        doc[sigma_name(s)] = row;
    }
    return doc;
}

EpsilonFamily family_from_json(const json& doc) {
    expect_format(doc, kFamilyFormat);
    EpsilonFamily f;
    const std::vector<std::string> universe = {eps_symbol().name()};
    for (Sigma s : {Sigma::Minus, Sigma::Zero, Sigma::Plus}) {
        auto it = doc.find(sigma_name(s));
        if (it == doc.end()) continue;
        if (!it->is_object()) throw InputError(std::string(sigma_name(s)) + " must map degrees to expressions");
        for (auto& [deg, expr] : it->items()) {
            if (deg.size() != 1 || deg[0] < '0' || deg[0] > '2')
                throw InputError(std::string(sigma_name(s)) + ": degree '" + deg + "' is not one of 0..2");
            f.at(s, deg[0] - '0') = parse_expr(get_string(expr, sigma_name(s)), universe);
        }
    }
    return f;
}

json limit_to_json(const LimitData& b) {
    json j;
    j["b"] = triple(b.b);
    j["b1"] = triple(b.b1);
    j["b0"] = triple(b.b0);
    return j;
}

json params_to_json(const HeunParams& p) {
    json j = json::object();
    for (auto& n : param_names(p.cls)) j[n] = p.get(n).str();
    return j;
}

json ode_to_json(const HeunODE& ode, const MatchResult* match) {
    json doc;
    doc["format"] = kOdeFormat;
    doc["variable"] = "x";
    doc["convention"] = "p2*g'' + p1*g' + p0*g = 0";
    doc["class"] = ode_class_name(ode.cls);
    doc["p2"] = qpoly_map(ode.p[2]);
    doc["p1"] = qpoly_map(ode.p[1]);
    doc["p0"] = qpoly_map(ode.p[0]);
    doc["rho"] = ode.rho.str();
    doc["accessory"] = ode.accessory.str();
    doc["display"] = ode.str();
    json sing = json::array();
    for (auto& s : ode.singularities) {
        json e;
        e["at"] = s.infinite ? "infinity" : s.at.str();
        if (!s.infinite) e["multiplicity"] = s.multiplicity;
        e["rank"] = s.rank.str();
        e["regular"] = s.regular();
        sing.push_back(e);
    }
    doc["singularities"] = sing;
    if (ode.source) doc["limit"] = limit_to_json(*ode.source);
    if (match) {
        json m;
        if (match->params) {
            m["class"] = ode_class_name(match->params->cls);
            m["parameters"] = params_to_json(*match->params);
            m["a"] = match->a.str();
            m["lambda"] = match->lambda.str();
            m["rho"] = match->rho.str();
        } else {
            m["obstruction"] = match->obstruction;
        }
        doc["heun"] = m;
    }
    return doc;
}

json taxonomy_to_json(const TaxonomyLabel& t) {
    json j;
    j["class"] = tax_class_name(t.cls);
    if (!t.variant.empty()) j["variant"] = t.variant;
    if (t.reduction != Reduction::NotApplicable) j["reduction"] = reduction_name(t.reduction);
    j["signature"] = t.signature_string();
    return j;
}

json report_to_json(const VerifyReport& r) {
    json j;
    j["family"] = r.family;
    j["catalog"] = catalog_name(r.catalog);
    j["match"] = r.match;
    j["accessorySign"] = accessory_sign_name(r.accessory);
    j["discrepancies"] = r.discrepancies;
    return j;
}

json read_json_file(const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot read '" + path + "'");
        ss << in.rdbuf();
    }
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace qheun
