#include "qheun/climit.hpp"
#include "qheun/errors.hpp"
#include "qheun/gauge.hpp"
#include "qheun/io.hpp"
#include "qheun/lax.hpp"
#include "qheun/local.hpp"
#include "qheun/odeheun.hpp"
#include "qheun/parser.hpp"
#include "qheun/qdiff.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qheun;

namespace {

enum Exit { Ok = 0, Mismatch = 1, Usage = 2, Domain = 3 };

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw InputError("cannot write '" + out + "'");
    f << text;
}

void emit(const json& doc, const std::string& out) { emit(doc.dump(2) + "\n", out); }

Location parse_location(const std::string& s) { return s == "infinity" ? Location::Infinity : Location::Zero; }

std::vector<std::string> with_q(std::vector<std::string> v) {
    if (std::find(v.begin(), v.end(), "q") == v.end()) v.push_back("q");
    return v;
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

struct Options {
    std::string input = "-", out, bind;
    // derive / verify
    std::string catalog = "murata", family, variant = "paper";
    bool gauge = false;
    // polygon
    std::string format = "ascii";
    // gauge
    std::string kind, alpha, num, den, symbol;
    long lambda = 0;
    bool inverse = false;
    // exponents / series
    std::string at = "zero", residual_at;
    int root = 0, terms = 10;
    bool use_float = false;
    // limit
    std::string family_file, preset, emit_path, crosscheck;
};

Catalog need_catalog(const std::string& s) {
    auto c = parse_catalog(s);
    if (!c) throw InputError("unknown catalog '" + s + "' (murata or kny)");
    return *c;
}

int cmd_derive(const Options& o) {
    Catalog c = need_catalog(o.catalog);
    Variant v = o.variant == "alt" ? Variant::Alt : Variant::Paper;
    Bindings b;
    if (!o.bind.empty()) {
        b = bindings_from_json(read_json_file(o.bind));
        std::vector<std::string> allowed;
        for (Symbol s : family_parameters(c, o.family)) allowed.push_back(s.name());
        check_bindings(b, with_q(allowed));
    }
    emit(equation_to_json(derive(c, o.family, v, o.gauge, as_ratfun(b))), o.out);
    return Ok;
}

int cmd_classify(const Options& o) {
    emit(taxonomy_to_json(classify(equation_from_json(read_json_file(o.input)))), o.out);
    return Ok;
}

int cmd_polygon(const Options& o) {
    QDiffEq eq = equation_from_json(read_json_file(o.input));
    emit(render_diagram(newton_diagram(eq), o.format == "svg" ? DiagramFormat::Svg : DiagramFormat::Ascii), o.out);
    return Ok;
}

int cmd_gauge(const Options& o) {
    json doc = read_json_file(o.input);
    QDiffEq eq = equation_from_json(doc);
    GaugeRecord g;
    if (o.kind == "power") {
        if (!o.symbol.empty()) {
            if (!valid_identifier(o.symbol)) throw InputError("'" + o.symbol + "' is not an identifier");
            g = PowerGauge{RatFun(Symbol(o.symbol))};
        } else {
            g = PowerGauge{RatFun(q_symbol()).pow(o.lambda)};
        }
    } else if (o.kind == "pochhammer" || o.kind == "theta") {
        if (o.alpha.empty()) throw InputError("--alpha is required for --kind " + o.kind);
        g = MoveGauge{o.kind == "theta" ? MoveKind::Theta : MoveKind::Pochhammer, parse_expr(o.alpha), o.inverse};
    } else if (o.kind == "linear") {
        if (o.num.empty()) throw InputError("--num is required for --kind linear");
        Symbol x(eq.variable);
        UPoly den = o.den.empty() ? UPoly(1) : UPoly::from_ratfun(parse_expr(o.den), x);
        g = LinearGauge{UPoly::from_ratfun(parse_expr(o.num), x), den};
    } else if (o.kind == "invert") {
        g = InvertGauge{};
    } else {
        throw InputError("unknown gauge kind '" + o.kind + "'");
    }
    emit(equation_to_json(apply_gauge(eq, g)), o.out);
    return Ok;
}

int cmd_exponents(const Options& o) {
    json doc = read_json_file(o.input);
    QDiffEq eq = equation_from_json(doc);
    CharData cd = char_exponents(eq, parse_location(o.at));
    json j;
    j["location"] = location_name(cd.at);
    j["regularity"] = regularity_name(cd.regularity);
    j["c2"] = cd.c2.str();
    j["c1"] = cd.c1.str();
    j["c0"] = cd.c0.str();
    j["rootCount"] = cd.root_count;
    json sr = json::array();
    for (auto& r : cd.symbolic_roots) sr.push_back(r.str());
    j["symbolicRoots"] = sr;
    if (!o.bind.empty()) {
        Bindings b = bindings_from_json(read_json_file(o.bind));
        check_bindings(b, with_q(declared_parameters(doc)));
        json roots = json::array();
        for (auto& r : char_roots(cd, b)) roots.push_back(r.str());
        j["roots"] = roots;
    }
    emit(j, o.out);
    return Ok;
}

int cmd_series(const Options& o) {
    json doc = read_json_file(o.input);
    QDiffEq eq = equation_from_json(doc);
    if (o.bind.empty()) throw InputError("--bind is required");
    Bindings b = bindings_from_json(read_json_file(o.bind));
    check_bindings(b, with_q(declared_parameters(doc)));
    Location at = parse_location(o.at);
    json j;
    j["location"] = location_name(at);
    j["root"] = o.root;
    j["terms"] = o.terms;
    if (o.use_float) {
        if (auto q = b.find(q_symbol()); q != b.end() && !(q->second > Rational(0) && q->second < Rational(1)))
            throw DomainError("float mode needs 0 < q < 1");
        FloatSeries s = series_solution_float(eq, b, o.root, o.terms, at);
        j["s"] = complex_json(s.s);
        json c = json::array();
        for (auto& v : s.c) c.push_back(complex_json(v));
        j["coefficients"] = c;
        if (!o.residual_at.empty()) {
            double x = Rational::parse(o.residual_at).to_double();
            j["residual"] = residual(s, x);
            j["relativeResidual"] = relative_residual(s, x);
        }
    } else {
        ExactSeries s = series_solution(eq, b, o.root, o.terms, at);
        j["s"] = s.s.str();
        json c = json::array();
        for (auto& v : s.c) c.push_back(v.str());
        j["coefficients"] = c;
        if (!o.residual_at.empty()) j["residual"] = residual_exact(s, Rational::parse(o.residual_at)).str();
    }
    emit(j, o.out);
    return Ok;
}

int cmd_limit(const Options& o) {
    EpsilonFamily fam;
    std::vector<double> xs = {0.05, 0.1};
    int terms = 30;
    if (!o.preset.empty()) {
        Preset p = preset(o.preset);
        fam = p.family;
        xs = p.xs;
        terms = p.terms;
    } else if (!o.family_file.empty()) {
        json doc = read_json_file(o.family_file);
        if (doc.is_object() && doc.value("format", "") == "qheun-eq/1") {
            Bindings b;
            if (!o.bind.empty()) {
                b = bindings_from_json(read_json_file(o.bind));
                check_bindings(b, declared_parameters(doc));
            }
            fam = EpsilonFamily::from_equation(equation_from_json(doc), as_ratfun(b));
        } else {
            fam = family_from_json(doc);
        }
    } else {
        throw InputError("limit needs --family-file or --preset");
    }
    LimitData b = limit_coefficients(fam);
    HeunODE ode = classify_ode(emit_ode(b));
    MatchResult m = match_class(ode);
    json doc = ode_to_json(ode, &m);
    doc["corollary"] = corollary_holds(fam, b);
    if (!o.crosscheck.empty()) {
        Rational eps = Rational::parse(o.crosscheck);
        double d1 = crosscheck(fam, eps, xs, terms);
        double d2 = crosscheck(fam, eps / Rational(10), xs, terms);
        json c;
        c["eps"] = eps.str();
        c["deviation"] = d1;
        c["deviationTenth"] = d2;
        c["ratio"] = d1 / d2;
        doc["crosscheck"] = c;
    }
    emit(doc, o.emit_path.empty() ? o.out : o.emit_path);
    return Ok;
}

int cmd_verify(const Options& o) {
    std::optional<Catalog> only;
    if (!o.catalog.empty()) only = need_catalog(o.catalog);
    Bindings b;
    if (!o.bind.empty()) b = bindings_from_json(read_json_file(o.bind));
    std::vector<VerifyReport> reports;
    if (!o.family.empty()) {
        if (!only) throw InputError("--family needs --catalog");
        reports.push_back(verify_family(*only, o.family, b));
    } else {
        reports = verify_all(only, b);
    }
    std::ostringstream os;
    os << "[\n";
    bool all = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        os << "  " << report_to_json(reports[i]).dump() << (i + 1 < reports.size() ? ",\n" : "\n");
        all = all && reports[i].match;
    }
    os << "]\n";
    emit(os.str(), o.out);
    return all ? Ok : Mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for q-Heun type q-difference equations and their q -> 1 limits"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* s) {
        s->add_option("input", o.input, "qheun-eq/1 document (- for standard input)");
    };
    auto out = [&](CLI::App* s) { s->add_option("--out", o.out, "write the result here"); };

    auto* derive_cmd = app.add_subcommand("derive", "equation of a catalog family");
    derive_cmd->add_option("--catalog", o.catalog)->check(CLI::IsMember({"murata", "kny"}));
    derive_cmd->add_option("--family", o.family)->required();
    derive_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"paper", "alt"}));
    derive_cmd->add_flag("--gauge", o.gauge, "apply the family's gauge form (kny)");
    derive_cmd->add_option("--bind", o.bind, "qheun-params/1 document");
    out(derive_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "taxonomy label");
    input(classify_cmd);
    out(classify_cmd);

    auto* polygon_cmd = app.add_subcommand("polygon", "Newton diagram");
    input(polygon_cmd);
    polygon_cmd->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "svg"}));
    out(polygon_cmd);

    auto* gauge_cmd = app.add_subcommand("gauge", "gauge transformation");
    input(gauge_cmd);
    gauge_cmd->add_option("--kind", o.kind)
        ->required()
        ->check(CLI::IsMember({"power", "pochhammer", "theta", "linear", "invert"}));
    gauge_cmd->add_option("--lambda", o.lambda, "power: integer exponent");
    gauge_cmd->add_option("--symbol", o.symbol, "power: parameter standing for q^lambda");
    gauge_cmd->add_option("--alpha", o.alpha, "pochhammer/theta: factor parameter");
    gauge_cmd->add_flag("--inverse", o.inverse, "pochhammer/theta: undo the move");
    gauge_cmd->add_option("--num", o.num, "linear: u(qx)/u(x) numerator");
    gauge_cmd->add_option("--den", o.den, "linear: denominator");
    out(gauge_cmd);

    auto* exp_cmd = app.add_subcommand("exponents", "characteristic exponents");
    input(exp_cmd);
    exp_cmd->add_option("--at", o.at)->check(CLI::IsMember({"zero", "infinity"}));
    exp_cmd->add_option("--bind", o.bind, "qheun-params/1 document");
    out(exp_cmd);

    auto* series_cmd = app.add_subcommand("series", "local series solution");
    input(series_cmd);
    series_cmd->add_option("--bind", o.bind, "qheun-params/1 document")->required();
    series_cmd->add_option("--root", o.root)->check(CLI::IsMember({0, 1}));
    series_cmd->add_option("--terms", o.terms)->check(CLI::Range(0, 100000));
    series_cmd->add_option("--residual-at", o.residual_at, "exact rational x");
    series_cmd->add_option("--at", o.at)->check(CLI::IsMember({"zero", "infinity"}));
    series_cmd->add_flag("--float", o.use_float, "complex double arithmetic");
    out(series_cmd);

    auto* limit_cmd = app.add_subcommand("limit", "q -> 1 limit to a Heun-class ODE");
    limit_cmd->add_option("--family-file", o.family_file, "qheun-family/1 or qheun-eq/1 document");
    limit_cmd->add_option("--preset", o.preset)->check(CLI::IsMember(preset_ids()));
    limit_cmd->add_option("--bind", o.bind, "bindings for a qheun-eq/1 family file (eps allowed)");
    limit_cmd->add_option("--emit", o.emit_path, "write the qheun-ode/1 document here");
    limit_cmd->add_option("--crosscheck", o.crosscheck, "eps in (0, 1/10]");
    out(limit_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "derive every family and compare with the tables");
    verify_cmd->add_option("--catalog", o.catalog)->check(CLI::IsMember({"murata", "kny"}));
    verify_cmd->add_option("--family", o.family);
    verify_cmd->add_option("--bind", o.bind, "rational values for family parameters");
    out(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }
    if (verify_cmd->parsed() && verify_cmd->count("--catalog") == 0) o.catalog.clear();

    try {
        if (derive_cmd->parsed()) return cmd_derive(o);
        if (classify_cmd->parsed()) return cmd_classify(o);
        if (polygon_cmd->parsed()) return cmd_polygon(o);
        if (gauge_cmd->parsed()) return cmd_gauge(o);
        if (exp_cmd->parsed()) return cmd_exponents(o);
        if (series_cmd->parsed()) return cmd_series(o);
        if (limit_cmd->parsed()) return cmd_limit(o);
        if (verify_cmd->parsed()) return cmd_verify(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Domain;
    }
    return Usage;
}
