#include "qheun/lax.hpp"

#include "qheun/errors.hpp"
#include "qheun/gauge.hpp"
#include "qheun/parser.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace qheun {

namespace {

RatFun E(const std::string& s) { return parse_expr(s); }

RatFun sub(const RatFun& f, const std::map<Symbol, RatFun>& b) { return b.empty() ? f : f.substitute(b); }

Symbol X() { return sym("x"); }
Symbol Zv() { return sym("z"); }

struct MurataData {
    MurataFamily family;
    const char* id;
    const char *mu1, *mu2, *alpha, *gamma, *delta, *a22;
    const char *det, *tr0, *det0;
};

const MurataData murata_data[] = {
    {MurataFamily::A4, "A4", "(l-a1*t)*(l-a2*t)/(q*k1*m)", "q*k1*k2*m*(l-a3)",
     "(((th1+th2)*t-k1*MU1-MU2)/l+k2)/k1", "MU2-k2*((2*l+AL)-(a1+a2)*t-a3)",
     "-(k2*a1*a2*a3*t^2-(AL*l+MU1)*(k2*l-MU2))/l", "k2*(x-l)+MU2",
     "k1*k2*(x-a1*t)*(x-a2*t)*(x-a3)", "(th1+th2)*t", "th1*th2*t^2"},
    {MurataFamily::A5, "A5", "(l-a1*t)*(l-a2*t)/(q*k1*m)", "q*k1*k2*m*l",
     "((th1*t-k1*MU1-MU2)/l+k2)/k1", "MU2-k2*((2*l+AL)-(a1+a2)*t)", "(AL*l+MU1)*(k2*l-MU2)/l",
     "k2*(x-l)+MU2", "k1*k2*x*(x-a1*t)*(x-a2*t)", "th1*t", "0"},
    {MurataFamily::A5s, "A5s", "l*(l-a1*t)/(q*k1*m)", "q*k1*k2*m*(l-a3)",
     "((th1*t-k1*MU1-MU2)/l+k2)/k1", "MU2-k2*(2*l+AL-a1*t-a3)", "(AL*l+MU1)*(k2*l-MU2)/l",
     "k2*(x-l)+MU2", "k1*k2*x*(x-a1*t)*(x-a3)", "th1*t", "0"},
    {MurataFamily::A6, "A6", "l*(l-a1*t)/(q*k1*m)", "q*k1*k2*m*l", "((th1*t-k1*MU1-MU2)/l+k2)/k1",
     "MU2-k2*(2*l+AL-a1*t)", "(AL*l+MU1)*(k2*l-MU2)/l", "k2*(x-l)+MU2", "k1*k2*x^2*(x-a1*t)",
     "th1*t", "0"},
    {MurataFamily::A6s, "A6s", "l^2/(q*k1*m)", "q*k1*k2*m*(l-a3)", "((th1*t-k1*MU1-MU2)/l+k2)/k1",
     "MU2-k2*(2*l+AL-a3)", "(AL*l+MU1)*(k2*l-MU2)/l", "k2*(x-l)+MU2", "k1*k2*x^2*(x-a3)", "th1*t",
     "0"},
    {MurataFamily::A7, "A7", "l^2/(q*k1*m)", "q*k1*k2*m*l", "((th1*t-k1*MU1-MU2)/l+k2)/k1",
     "MU2-k2*(2*l+AL)", "(AL*l+MU1)*(k2*l-MU2)/l", "k2*(x-l)+MU2", "k1*k2*x^3", "th1*t", "0"},
    {MurataFamily::A7p, "A7p", "l^2/(q*k1*m)", "q*k1*k2*m", "(th1*t-k1*MU1-MU2)/(l*k1)", "MU2-k2",
     "-MU2*(AL*l+MU1)/l", "MU2", "k1*k2*x^2", "th1*t", "0"},
};

const MurataData& mdata(MurataFamily f) { return murata_data[static_cast<int>(f)]; }

// Specialization recipe: substitution, optional l -> 0 limit, optional
// multiplier w(x) on y1 = w y, gauge polynomial for F(x) = y1(qx).
struct Recipe {
    const char* var;  // substituted symbol
    const char* value;
    bool limit;
    const char* w;
    const char* p;
};

std::optional<Recipe> recipe(MurataFamily f, Variant v) {
    using F = MurataFamily;
    if (v == Variant::Paper) {
        switch (f) {
            case F::A4: return Recipe{"l", "a3", false, nullptr, "q*x-a1*t"};
            case F::A5: return Recipe{"l", "a1*t", false, "x/q-a1*t", "x-a1*t"};
            case F::A5s: return Recipe{"l", "a3", false, nullptr, "q*x-a1*t"};
            case F::A6: return Recipe{"l", "a1*t", false, "x/q-a1*t", "x-a1*t"};
            case F::A6s: return Recipe{"l", "a3", false, nullptr, "q^2*x-a3"};
            case F::A7: return Recipe{"m", "l^2*(1+d*l)/(q*th1*t)", true, nullptr, "q*x"};
            case F::A7p: return Recipe{"m", "th1*t/(q*k1*k2)+d*l", true, nullptr, nullptr};
        }
    } else {
        switch (f) {
            case F::A5: return Recipe{"m", "a1*a2*t*(1+d*l)/(q*th1)", true, nullptr, nullptr};
            case F::A6: return Recipe{"m", "l*(l-a1*t)*(1+d*l)/(q*th1*t)", true, nullptr, nullptr};
            default: break;
        }
    }
    return std::nullopt;
}

struct KNYData {
    KNYFamily family;
    const char* id;
    // L1 = C + X (g - T^-1) + sY Y (T - 1/g)
    const char *C, *X, *Y;
    int sY;
    const char *refP, *refZ, *refM;
    const char* d;
};

const char* const kX = "n1*n2*n3*(z/q-n4)/(f-z/q)";

const KNYData kny_data[] = {
    {KNYFamily::D5, "D5", "z*(g*n1-1)*(g*n2-1)/(q*g)-n1*n2*n3*n4*(g-n5/k2)*(g-n6/k2)/(f*g)",
     "n1*n2*(z-q*n3)*(z-q*n4)/(q*(q*f-z))", "(z-k1/n7)*(z-k1/n8)/(q*(f-z))", -1,
     "(z-k1/n7)*(z-k1/n8)/(n1*n2)",
     "-((1/n1+1/n2)*z^2-((n3*n7-k1)*(n4*n7-k1)/(n1*n2*n4*n7*n8*g)+n4/n1+n4/n2+q*n3*n5/k2+q*n3*n6/k2)*z"
     "+q*n3*n4*(n5+n6)/k2)",
     "(z-q*n3)*(z-n4)", nullptr},
    {KNYFamily::A4w, "A4w", "n1*n2*n3*n4*(g-n5/k2)*(g-n6/k2)/(f*g)+(g*n1-1)*z/(q*g)", kX,
     "(z-k1/n7)*(z-k1/n8)/(q*(f-z))", 1, "(z-k1/n7)*(z-k1/n8)",
     "-n1*z^2+d*z-k1^2*k2*(n5+n6)/(n5*n6*n7*n8)", "q*n1*n2*n3*(z-n4)",
     "n1*(q*n2*n3*(n5+n6)+k2*n4)/(q*k2)+(k1-n4*n7)*(k1-n4*n8)/(q*n4*n7*n8*g)"},
    {KNYFamily::E3a, "E3a", "n1*n2*n3*n4*(g-n5/k2)*(g-n6/k2)/(f*g)+n1*z/q", kX,
     "-(k1/n8)*(z-k1/n7)/(q*(f-z))", 1, "(k1/n8)*(q*z-n4)*(z-k1/n7)",
     "n1*z^2+d*z+k1^2*k2*(n5+n6)/(n5*n6*n7*n8)", "q*n1*n2*n3",
     "-n1*(n2*n3*(n5+n6)+k2*n4)/k2+k1*(k1-n4*n7)/(q*n4*n7*n8*g)"},
    {KNYFamily::E3b, "E3b", "(g-n5/k2)*n1*n2*n3*n4/f+(g*n1-1)*z/(q*g)", kX,
     "z*(z-k1/n8)/(q*(f-z))", 1, "z*(z-k1/n8)", "-n1*z^2+q*d*z-q*n1*n2*n3*n4*n5/k2",
     "q*n1*n2*n3*(z-n4)", "n1*(q*n2*n3*n5+k2*n4)/(q*k2)+(k1-n4*n8)/(q*n8*g)"},
    {KNYFamily::E2a, "E2a", "(g-n5/k2)*n1*n2*n3*n4/f+n1*z/q", kX, "-(k1/n8)*z/(q*(f-z))", 1,
     "(k1/n8)*z*(q*z-n4)", "n1*z^2+d*z+q*n1*n2*n3*n4*n5/k2", "q*n1*n2*n3",
     "n1*(q*n2*n3*n5+k2*n4)/(q*k2)+k1/(q*n8*g)"},
    {KNYFamily::E2b, "E2b", "g*n1*n2*n3*n4/f+(g*n1-1)*z/(q*g)", kX, "z*(z-k1/n8)/(q*(f-z))", 1,
     "z*(z-k1/n8)", "-n1*z^2+d*z", "-q*n1*n2*n3*(z-n4)", "n1*n4/q+(k1-n4*n8)/(q*n8*g)"},
    {KNYFamily::A1w, "A1w", "g*n1*n2*n3*n4/f-z/(q*g)", kX, "z*(z-k1/n8)/(q*(f-z))", 1, "z*(z-k1/n8)",
     "d*z", "-q*n1*n2*n3*(z-n4)", "(k1-n4*n8)/(q*n8*g)"},
    {KNYFamily::A1w8, "A1w8", "g*n1*n2*n3*n4/f+n1*z/q", kX, "-(k1/n8)*z/(q*(f-z))", 1,
     "(k1/n8)*z*(q*z-n4)", "n1*z^2-d*z", "q*n1*n2*n3", "n1*n4/q+k1/(q*n8*g)"},
};

const KNYData& kdata(KNYFamily f) { return kny_data[static_cast<int>(f)]; }

const char* const murata_ref[][3] = {
    {"q*x-a1*t", "-(q^2*k1*x^2+d*x+(th1+th2)*t)", "k1*k2*(q*x-a3)*(x-a2*t)"},
    {"x-a1*t", "-(q*k1*x^2-d*x+th1*t)", "k1*k2*x*(x-a2*t)"},
    {"q*x-a1*t", "-(q^2*k1*x^2+d*x+th1*t)", "k1*k2*x*(q*x-a3)"},
    {"x-a1*t", "-(q*k1*x^2-d*x+th1*t)", "k1*k2*x^2"},
    {"q^2*x-a3", "-(q^2*k1*x^2-d*x+th1*t)", "k1*k2*x^2"},
    {"q*x", "-(q^2*k1*x^2-q*th1*t*d*x+th1*t)", "q*k1*k2*x^2"},
    {"1", "-q*(q*k1*x^2+q*k1*k2*d*x+th1*t)", "q*k1*k2*x^2"},
};

const char* const murata_d[] = {
    "q*k1*a3+q*(th1+th2)*t/a3-(a3-a1*t)*(a3-a2*t)/(m*a3)",
    "q*k1*a1*t+th1/a1-q*k1*k2*m",
    "q*k1*a3+q*th1*t/a3-(a3-a1*t)/m",
    "q*k1*a1*t+th1/a1-q*k1*k2*m",
    "q*k1*a3+q*th1*t/a3-a3/m",
    nullptr,
    nullptr,
};

QDiffEq from_strings(const char* p, const char* z, const char* m, Symbol var) {
    return QDiffEq(UPoly::from_ratfun(E(p), var), UPoly::from_ratfun(E(z), var),
                   UPoly::from_ratfun(E(m), var), var.name());
}

// Divides P, Z, M by their common factor in the variable.
QDiffEq remove_common_factor(const QDiffEq& eq) {
    UPoly g = UPoly::gcd(UPoly::gcd(eq.P, eq.Z), eq.M);
    if (g.degree() <= 0) return eq;
    return QDiffEq(eq.P / g, eq.Z / g, eq.M / g, eq.variable);
}

// Scales by a power of s so the lowest order in s is zero, then sets s = 0.
QDiffEq limit_relation(const QDiffEq& eq, Symbol s) {
    int lo = 1 << 30;
    for (Shift sh : {Shift::P, Shift::Z, Shift::M})
        for (auto& c : eq.coeffs(sh).coeffs())
            if (!c.is_zero()) lo = std::min(lo, order_at_zero(c, s));
    RatFun scale = RatFun(s).pow(-lo);
    auto lim = [&](const UPoly& u) {
        std::vector<RatFun> out;
        for (auto& c : u.coeffs()) out.push_back(c.is_zero() ? c : limit_at_zero(c * scale, s));
        return UPoly(out);
    };
    return QDiffEq(lim(eq.P), lim(eq.Z), lim(eq.M), eq.variable);
}

std::map<Symbol, RatFun> with_constraint(std::map<Symbol, RatFun> b, Symbol target, const RatFun& value,
                                         const char* what) {
    RatFun bound = sub(value, b);
    auto it = b.find(target);
    if (it != b.end()) {
        if (!ratfun_eq(it->second, bound)) throw ConstraintViolation(what);
    } else {
        b[target] = bound;
    }
    return b;
}

}  // namespace

Symbol sym(const char* name) { return Symbol(name); }

const char* catalog_name(Catalog c) { return c == Catalog::Murata ? "murata" : "kny"; }

std::optional<Catalog> parse_catalog(const std::string& s) {
    if (s == "murata") return Catalog::Murata;
    if (s == "kny") return Catalog::KNY;
    return std::nullopt;
}

const char* family_id(MurataFamily f) { return mdata(f).id; }
const char* family_id(KNYFamily f) { return kdata(f).id; }

std::optional<MurataFamily> parse_murata_family(const std::string& s) {
    for (auto& d : murata_data)
        if (s == d.id) return d.family;
    return std::nullopt;
}

std::optional<KNYFamily> parse_kny_family(const std::string& s) {
    for (auto& d : kny_data)
        if (s == d.id) return d.family;
    return std::nullopt;
}

const std::vector<MurataFamily>& murata_families() {
    static const std::vector<MurataFamily> v = {MurataFamily::A4,  MurataFamily::A5, MurataFamily::A5s,
                                                MurataFamily::A6,  MurataFamily::A6s, MurataFamily::A7,
                                                MurataFamily::A7p};
    return v;
}

const std::vector<KNYFamily>& kny_families() {
    static const std::vector<KNYFamily> v = {KNYFamily::D5,  KNYFamily::A4w, KNYFamily::E3a,
                                             KNYFamily::E3b, KNYFamily::E2a, KNYFamily::E2b,
                                             KNYFamily::A1w, KNYFamily::A1w8};
    return v;
}

std::map<Symbol, RatFun> constraint_binding(Catalog c, MurataFamily f) {
    if (c == Catalog::KNY) return {{sym("n6"), E("k1^2*k2^2/(q*n1*n2*n3*n4*n5*n7*n8)")}};
    if (f == MurataFamily::A4) return {{sym("th2"), E("-k1*k2*a1*a2*a3/th1")}};
    return {};
}

UPoly LaxMatrix::det() const { return A11 * A22 - A12 * A21; }

LaxMatrix build_murata(const MurataParams& p) {
    const MurataData& d = mdata(p.family);
    std::map<Symbol, RatFun> env = p.bindings;
    if (p.family == MurataFamily::A4)
        env = with_constraint(env, sym("th2"), E("-k1*k2*a1*a2*a3/th1"), "th1*th2 = -k1*k2*a1*a2*a3 fails");

    RatFun mu1 = sub(E(d.mu1), env), mu2 = sub(E(d.mu2), env);
    std::map<Symbol, RatFun> ph = env;
    ph[sym("MU1")] = mu1;
    ph[sym("MU2")] = mu2;
    RatFun al = E(d.alpha).substitute(ph);
    ph[sym("AL")] = al;
    RatFun ga = E(d.gamma).substitute(ph), de = E(d.delta).substitute(ph);
    ph[sym("GA")] = ga;
    ph[sym("DE")] = de;

    const Symbol x = X();
    LaxMatrix m{p.family, {}, {}, {}, {}};
    m.A11 = UPoly::from_ratfun(E("k1*((x-l)*(x-AL)+MU1)").substitute(ph), x);
    m.A12 = UPoly::from_ratfun(E("w*(x-l)").substitute(ph), x);
    m.A21 = UPoly::from_ratfun(E("k1/w*(GA*x+DE)").substitute(ph), x);
    m.A22 = UPoly::from_ratfun(E(d.a22).substitute(ph), x);
    if (m.A12.is_zero()) throw InvariantViolation("A12 vanishes identically");

    UPoly det = m.det();
    UPoly want = UPoly::from_ratfun(sub(E(d.det), env), x);
    if (!(det == want))
        throw InvariantViolation(std::string(d.id) + ": det A(x) is " + det.str() + ", expected " + want.str());
    RatFun tr0 = m.A11.coeff(0) + m.A22.coeff(0);
    if (!ratfun_eq(tr0, sub(E(d.tr0), env)))
        throw InvariantViolation(std::string(d.id) + ": trace A(0) is " + tr0.str());
    if (!ratfun_eq(det.coeff(0), sub(E(d.det0), env)))
        throw InvariantViolation(std::string(d.id) + ": det A(0) is " + det.coeff(0).str());
    return m;
}

QDiffEq scalar_reduce(const LaxMatrix& m) {
    const RatFun q(q_symbol()), l(sym("l"));
    UPoly xl = UPoly::linear(RatFun(1), -l);
    UPoly qxl = UPoly::linear(q, -l);
    UPoly r1 = -(xl * m.A11.dilate(q) + qxl * m.A22);
    UPoly r0 = qxl * m.det();
    return QDiffEq(xl, r1, r0, "x");
}

bool has_variant(MurataFamily f, Variant v) { return recipe(f, v).has_value(); }

QDiffEq specialize(MurataFamily f, Variant v, const QDiffEq& rel, const std::map<Symbol, RatFun>& b) {
    auto r = recipe(f, v);
    if (!r) throw DomainError(std::string("no alt specialization for ") + family_id(f));
    const Symbol x = X();
    QDiffEq eq = rel.substitute({{sym(r->var), sub(E(r->value), b)}});
    if (r->limit) eq = limit_relation(eq, sym("l"));
    if (r->w) {
        UPoly w = UPoly::from_ratfun(sub(E(r->w), b), x);
        RatFun q = sub(RatFun(q_symbol()), b);
        eq = QDiffEq(eq.P * w.dilate(q * q), eq.Z * w.dilate(q), eq.M * w, eq.variable);
    }
    eq = remove_common_factor(eq);
    if (r->p) eq = gauge_linear(eq, UPoly::from_ratfun(sub(E(r->p), b), x));
    return eq;
}

KNYOperator build_kny(const KNYParams& p) {
    const KNYData& d = kdata(p.family);
    KNYOperator op{p.family, {}, {}, {}};
    try {
        std::map<Symbol, RatFun> env = p.bindings;
        env = with_constraint(env, sym("n6"), E("k1^2*k2^2/(q*n1*n2*n3*n4*n5*n7*n8)"),
                              "k1^2*k2^2 = q*n1*...*n8 fails");
        env[sym("f")] = sub(RatFun(sym("n4")), p.bindings);
        RatFun C = E(d.C).substitute(env), Xc = E(d.X).substitute(env), Y = E(d.Y).substitute(env);
        RatFun g = sub(RatFun(sym("g")), env);
        RatFun sY(d.sY);
        op.c_plus = sY * Y;
        op.c_zero = C + g * Xc - sY * Y / g;
        op.c_minus = -Xc;
    } catch (const ZeroDenominator&) {
        throw SubstitutionSingular(std::string(d.id) + ": a denominator of L1 vanishes at the given values");
    }
    return op;
}

bool has_gauge_form(KNYFamily f) {
    return f == KNYFamily::E3a || f == KNYFamily::E2a || f == KNYFamily::A1w8;
}

QDiffEq kny_to_equation(const KNYOperator& op, bool apply_gauge, const std::map<Symbol, RatFun>& b) {
    const Symbol z = Zv();
    auto [pn, pd] = UPoly::fraction(op.c_plus, z);
    auto [zn, zd] = UPoly::fraction(op.c_zero, z);
    auto [mn, md] = UPoly::fraction(op.c_minus, z);
    auto lcm = [](const UPoly& a, const UPoly& b) { return a * (b / UPoly::gcd(a, b)); };
    UPoly L = lcm(lcm(pd.monic(), zd.monic()), md.monic());
    QDiffEq eq(pn * (L / pd), zn * (L / zd), mn * (L / md), "z");
    eq = remove_common_factor(eq);
    if (apply_gauge && has_gauge_form(op.family)) eq = gauge_linear(eq, UPoly::from_ratfun(sub(E("q*z-n4"), b), z));
    return eq;
}

QDiffEq reference_equation(MurataFamily f) {
    auto& r = murata_ref[static_cast<int>(f)];
    return from_strings(r[0], r[1], r[2], X());
}

QDiffEq reference_equation(KNYFamily f) {
    auto& d = kdata(f);
    return from_strings(d.refP, d.refZ, d.refM, Zv());
}

std::optional<RatFun> accessory_formula(MurataFamily f) {
    const char* s = murata_d[static_cast<int>(f)];
    if (!s) return std::nullopt;
    return E(s);
}

std::optional<RatFun> accessory_formula(KNYFamily f) {
    const char* s = kdata(f).d;
    if (!s) return std::nullopt;
    return E(s);
}

const char* accessory_sign_name(AccessorySign s) {
    switch (s) {
        case AccessorySign::AsPrinted: return "asPrinted";
        case AccessorySign::Flipped: return "flipped";
        case AccessorySign::Neither: return "neither";
    }
    return "?";
}

QDiffEq derive(Catalog c, const std::string& family, Variant v, bool gauge,
               const std::map<Symbol, RatFun>& bindings) {
    // q stays symbolic through elimination and gauge steps and is bound last.
    std::map<Symbol, RatFun> b = bindings, qb;
    if (auto it = b.find(q_symbol()); it != b.end()) {
        qb.insert(*it);
        b.erase(it);
    }
    auto finish = [&](const QDiffEq& eq) { return qb.empty() ? eq : remove_common_factor(eq.substitute(qb)); };
    if (c == Catalog::Murata) {
        auto f = parse_murata_family(family);
        if (!f) throw InputError("unknown Murata family '" + family + "'");
        if (!has_variant(*f, v)) throw InputError("family " + family + " has no alt specialization");
        QDiffEq rel = scalar_reduce(build_murata({*f, b}));
        return finish(specialize(*f, v, rel, b));
    }
    auto f = parse_kny_family(family);
    if (!f) throw InputError("unknown KNY family '" + family + "'");
    return finish(kny_to_equation(build_kny({*f, b}), gauge, b));
}

std::vector<Symbol> family_parameters(Catalog c, const std::string& family) {
    std::set<Symbol, SymbolNameLess> s;
    auto add = [&](const RatFun& f) {
        auto v = f.variables();
        s.insert(v.begin(), v.end());
    };
    if (c == Catalog::Murata) {
        auto f = parse_murata_family(family);
        if (!f) throw InputError("unknown Murata family '" + family + "'");
        auto& d = mdata(*f);
        for (const char* e : {d.mu1, d.mu2, d.alpha, d.gamma, d.delta, d.a22, d.det}) add(E(e));
        for (auto& [k, v] : constraint_binding(c, *f)) {
            s.erase(k);
            add(v);
        }
    } else {
        auto f = parse_kny_family(family);
        if (!f) throw InputError("unknown KNY family '" + family + "'");
        auto& d = kdata(*f);
        for (const char* e : {d.C, d.X, d.Y}) add(E(e));
        if (s.count(sym("n6"))) {
            s.erase(sym("n6"));
            add(constraint_binding(c).begin()->second);
        }
    }
    for (const char* drop : {"l", "m", "w", "d", "g", "f", "x", "z", "MU1", "MU2", "AL", "GA", "DE"})
        s.erase(sym(drop));
    return {s.begin(), s.end()};
}

namespace {

std::string ratio_note(const RatFun& derived, const RatFun& reference, Symbol var) {
    if (reference.is_zero() || derived.is_zero()) return "";
    RatFun r = derived / reference;
    if (r.contains(var)) return "";
    std::string s = r.str();
    return s.size() <= 60 ? " (derived/reference = " + s + ")" : "";
}

}  // namespace

VerifyReport verify_family(Catalog c, const std::string& family, const std::map<Symbol, Rational>& bindings) {
    VerifyReport rep;
    rep.catalog = c;
    rep.family = family;

    std::map<Symbol, RatFun> b;
    for (auto& [k, v] : bindings) b[k] = RatFun(v);

    QDiffEq ref;
    std::optional<RatFun> dform;
    std::map<Symbol, RatFun> cons;
    if (c == Catalog::Murata) {
        auto f = parse_murata_family(family);
        if (!f) throw InputError("unknown Murata family '" + family + "'");
        ref = reference_equation(*f);
        dform = accessory_formula(*f);
        cons = constraint_binding(c, *f);
    } else {
        auto f = parse_kny_family(family);
        if (!f) throw InputError("unknown KNY family '" + family + "'");
        ref = reference_equation(*f);
        dform = accessory_formula(*f);
        cons = constraint_binding(c);
    }
    rep.derived = derive(c, family, Variant::Paper, true, b);

    // Constraint and bindings on the reference side; d is replaced by its
    // reference formula (or kept when the substitution introduced it).
    auto bind_ref = [&](const RatFun& dval) {
        std::map<Symbol, RatFun> env = b;
        for (auto& [k, v] : cons)
            if (!env.count(k)) env[k] = sub(v, b);
        env[sym("d")] = sub(dval, env);
        return ref.substitute(env);
    };
    RatFun dsym(sym("d"));
    RatFun dval = dform ? *dform : dsym;
    rep.accessory_map = dform ? "d = " + dform->str() : "d enters through the substitution";
    QDiffEq reference = bind_ref(dval), flipped = bind_ref(-dval);

    QDiffEq D = rep.derived.normalized();
    const Symbol var(D.variable);
    auto compare = [&](const QDiffEq& R) {
        std::vector<std::string> out;
        for (Shift s : {Shift::P, Shift::Z, Shift::M}) {
            int top = std::max(D.coeffs(s).degree(), R.coeffs(s).degree());
            for (int k = 0; k <= top; ++k) {
                if (s == Shift::Z && k == 1) continue;
                RatFun a = D.coeff(s, k), e = R.coeff(s, k);
                if (!ratfun_eq(a, e))
                    out.push_back(std::string(shift_name(s)) + std::to_string(k) + ": derived " + a.str() +
                                  ", reference " + e.str() + ratio_note(a, e, var));
            }
        }
        return out;
    };
    QDiffEq Rp = reference.normalized(), Rf = flipped.normalized();
    auto dp = compare(Rp), df = compare(Rf);
    bool zp = ratfun_eq(D.coeff(Shift::Z, 1), Rp.coeff(Shift::Z, 1));
    bool zf = ratfun_eq(D.coeff(Shift::Z, 1), Rf.coeff(Shift::Z, 1));
    bool ok;
    if (dp.empty() && zp) {
        rep.accessory = AccessorySign::AsPrinted;
        ok = true;
    } else if (df.empty() && zf) {
        rep.accessory = AccessorySign::Flipped;
        ok = true;
    } else {
        ok = false;
        bool usef = df.size() < dp.size() || (df.size() == dp.size() && zf && !zp);
        const QDiffEq& R = usef ? Rf : Rp;
        rep.discrepancies = usef ? df : dp;
        rep.accessory = (usef ? zf : zp) ? (usef ? AccessorySign::Flipped : AccessorySign::AsPrinted)
                                         : AccessorySign::Neither;
        if (rep.accessory == AccessorySign::Neither) {
            RatFun z1 = D.coeff(Shift::Z, 1), e = R.coeff(Shift::Z, 1);
            rep.discrepancies.push_back("Z1 (accessory): derived " + z1.str() + ", reference " + e.str() +
                                        ratio_note(z1, e, var));
        }
    }
    rep.match = ok;
    return rep;
}

std::vector<VerifyReport> verify_all(std::optional<Catalog> only, const std::map<Symbol, Rational>& bindings) {
    std::vector<std::pair<Catalog, std::string>> jobs;
    if (!only || *only == Catalog::Murata)
        for (auto f : murata_families()) jobs.push_back({Catalog::Murata, family_id(f)});
    if (!only || *only == Catalog::KNY)
        for (auto f : kny_families()) jobs.push_back({Catalog::KNY, family_id(f)});
    std::vector<std::future<VerifyReport>> fut;
    for (auto& [c, id] : jobs)
        fut.push_back(std::async(std::launch::async, [c = c, id = id, &bindings] {
            return verify_family(c, id, bindings);
        }));
    std::vector<VerifyReport> out;
    for (auto& f : fut) out.push_back(f.get());
    return out;
}

}  // namespace qheun
