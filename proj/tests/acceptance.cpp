// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "qheun/climit.hpp"
#include "qheun/errors.hpp"
#include "qheun/gauge.hpp"
#include "qheun/io.hpp"
#include "qheun/lax.hpp"
#include "qheun/local.hpp"
#include "qheun/odeheun.hpp"
#include "qheun/parser.hpp"
#include "qheun/qdiff.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace qheun;
using cd = std::complex<double>;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records a failed check with a short note; keeps the first few notes.
struct Tally {
    int checks = 0, failures = 0;
    std::vector<std::string> notes;
    void check(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (notes.size() < 6) notes.push_back(what);
    }
    Outcome outcome(const std::string& summary) const {
        std::ostringstream os;
        os << summary << " (" << checks - failures << "/" << checks << " checks)";
        for (auto& n : notes) os << "; " << n;
        return {failures == 0, os.str()};
    }
};

RatFun R(const std::string& s) { return parse_expr(s); }

UPoly U(const std::vector<std::string>& v) {
    std::vector<RatFun> c;
    for (auto& s : v) c.push_back(R(s));
    return UPoly(c);
}

QDiffEq E(const std::vector<std::string>& p, const std::vector<std::string>& z, const std::vector<std::string>& m) {
    return QDiffEq(U(p), U(z), U(m));
}

std::vector<std::pair<Catalog, std::string>> catalog() {
    std::vector<std::pair<Catalog, std::string>> out;
    for (auto f : murata_families()) out.push_back({Catalog::Murata, family_id(f)});
    for (auto f : kny_families()) out.push_back({Catalog::KNY, family_id(f)});
    return out;
}

const std::map<Symbol, RatFun>& a4_constraint() {
    static const std::map<Symbol, RatFun> c = {{sym("th2"), R("-k1*k2*a1*a2*a3/th1")}};
    return c;
}

// ---------------------------------------------------------------- 1

struct MurataFacts {
    MurataFamily f;
    const char* det;
    const char* tr0;
    const char* det0;
};

const MurataFacts murata_facts[] = {
    {MurataFamily::A4, "k1*k2*(x-a1*t)*(x-a2*t)*(x-a3)", "(th1+th2)*t", "th1*th2*t^2"},
    {MurataFamily::A5, "k1*k2*x*(x-a1*t)*(x-a2*t)", "th1*t", "0"},
    {MurataFamily::A5s, "k1*k2*x*(x-a1*t)*(x-a3)", "th1*t", "0"},
    {MurataFamily::A6, "k1*k2*x^2*(x-a1*t)", "th1*t", "0"},
    {MurataFamily::A6s, "k1*k2*x^2*(x-a3)", "th1*t", "0"},
    {MurataFamily::A7, "k1*k2*x^3", "th1*t", "0"},
    {MurataFamily::A7p, "k1*k2*x^2", "th1*t", "0"},
};

Outcome lax_invariants() {
    Tally t;
    const Symbol x("x");
    for (const auto& m : murata_facts) {
        std::string id = family_id(m.f);
        LaxMatrix L = build_murata({m.f, {}});
        RatFun a11 = L.A11.to_ratfun(x), a12 = L.A12.to_ratfun(x), a21 = L.A21.to_ratfun(x), a22 = L.A22.to_ratfun(x);
        t.check(a11 * a22 - a12 * a21 == R(m.det).substitute(a4_constraint()), id + " det A");
        t.check(L.A11.coeff(0) + L.A22.coeff(0) == R(m.tr0).substitute(a4_constraint()), id + " trace A(0)");
        t.check(L.A11.coeff(0) * L.A22.coeff(0) - L.A12.coeff(0) * L.A21.coeff(0) ==
                    R(m.det0).substitute(a4_constraint()),
                id + " det A(0)");
    }
    return t.outcome("7 murata families");
}

// ---------------------------------------------------------------- 2

Outcome table_reproduction() {
    Tally t;
    int matched = 0, flipped = 0;
    auto reports = verify_all();
    for (auto& r : reports) {
        matched += r.match;
        flipped += r.accessory == AccessorySign::Flipped;
        std::string d = r.discrepancies.empty() ? "" : ": " + r.discrepancies[0].substr(0, 60) + "...";
        t.check(r.match, std::string(catalog_name(r.catalog)) + " " + r.family + " mismatch" + d);
    }
    t.check(reports.size() == 15, "expected 15 rows");
    std::ostringstream os;
    os << matched << "/" << reports.size() << " rows match, " << flipped << " accessory sign(s) flipped";
    return t.outcome(os.str());
}

// ---------------------------------------------------------------- 3

Outcome omega_cancellation() {
    Tally t;
    for (auto f : murata_families())
        t.check(!scalar_reduce(build_murata({f, {}})).contains(sym("w")), std::string(family_id(f)) + " contains w");
    return t.outcome("scalar_reduce over 7 families");
}

// ---------------------------------------------------------------- 4

struct Label {
    Catalog c;
    const char* id;
    TaxClass cls;
    Reduction red;
};

Outcome classification_vectors() {
    constexpr auto NA = Reduction::NotApplicable, NR = Reduction::NonReduced, SR = Reduction::SinglyReduced,
                   DR = Reduction::DoublyReduced;
    const Label labels[] = {
        {Catalog::Murata, "A4", TaxClass::Confluent, NR},
        {Catalog::Murata, "A5", TaxClass::DoublyConfluent, NR},
        {Catalog::Murata, "A5s", TaxClass::DoublyConfluent, NR},
        {Catalog::KNY, "A4w", TaxClass::Confluent, NR},
        {Catalog::KNY, "E3a", TaxClass::Biconfluent, NA},
        {Catalog::KNY, "E3b", TaxClass::DoublyConfluent, NR},
        {Catalog::KNY, "E2b", TaxClass::DoublyConfluent, SR},
        {Catalog::KNY, "A1w", TaxClass::DoublyConfluent, DR},
        {Catalog::Murata, "A6", TaxClass::Unclassified, NA},
        {Catalog::Murata, "A6s", TaxClass::Unclassified, NA},
        {Catalog::Murata, "A7", TaxClass::Unclassified, NA},
        {Catalog::Murata, "A7p", TaxClass::Unclassified, NA},
        {Catalog::KNY, "E2a", TaxClass::Unclassified, NA},
        {Catalog::KNY, "A1w8", TaxClass::Unclassified, NA},
    };
    Tally t;
    for (auto& l : labels) {
        std::vector<QDiffEq> eqs = {derive(l.c, l.id)};
        if (l.c == Catalog::Murata) eqs.push_back(reference_equation(*parse_murata_family(l.id)));
        else eqs.push_back(reference_equation(*parse_kny_family(l.id)));
        for (auto& e : eqs) {
            TaxonomyLabel lab = classify(e);
            t.check(lab.cls == l.cls && lab.reduction == l.red,
                    std::string(l.id) + " got " + tax_class_name(lab.cls) + "/" + reduction_name(lab.reduction));
        }
    }
    return t.outcome("14 families, derived and reference rows");
}

// ---------------------------------------------------------------- 5

// Rows 0,1,2 separated by '/', each row lists M, Z, P. F filled, O open,
// A either (all choices enumerated).
struct Figure {
    const char* name;
    const char* pattern;
    TaxClass cls;
};

const Figure class_figures[] = {
    {"q-Heun", "FAF/AAA/FAF", TaxClass::QHeun},
    {"hypergeometric pair, second", "FAF/FAF/OOO", TaxClass::HypergeometricType},
    {"cqHE", "FAF/AAF/FFO", TaxClass::Confluent},
    {"cqHE2", "FAF/FAA/OFF", TaxClass::Confluent},
    {"cqHE3", "OFF/FAA/FAF", TaxClass::Confluent},
    {"cqHE4", "FFO/AAF/FAF", TaxClass::Confluent},
    {"bqHE", "FAF/AAO/FFO", TaxClass::Biconfluent},
    {"bqHE2", "FAF/OAA/OFF", TaxClass::Biconfluent},
    {"bqHE3", "OFF/OAA/FAF", TaxClass::Biconfluent},
    {"bqHE4", "FFO/AAO/FAF", TaxClass::Biconfluent},
    {"dqHE", "FFO/AAF/FFO", TaxClass::DoublyConfluent},
    {"dqHE2", "OFF/FAA/OFF", TaxClass::DoublyConfluent},
    {"dqHE3", "OFF/FAF/FFO", TaxClass::DoublyConfluent},
    {"dqHE4", "FFO/FAF/OFF", TaxClass::DoublyConfluent},
};

const std::pair<const char*, const char*> catalog_figures[] = {
    {"A4", "FFF/FFF/FFO"},  {"A5", "OFF/FFF/FFO"},  {"A5s", "OFF/FFF/FFO"}, {"A6", "OFF/OFF/FFO"},
    {"A6s", "OFF/OFF/FFO"}, {"A7", "OFO/OFF/FFO"},  {"A7p", "OFF/OFO/FFO"}, {"A4w", "FFF/FFF/OFF"},
    {"E3a", "FFF/OFF/OFF"}, {"E3b", "FFO/FFF/OFF"}, {"E2a", "FFO/OFF/OFF"}, {"E2b", "FOO/FFF/OFF"},
    {"A1w", "FOO/FFF/OOF"}, {"A1w8", "FOO/OFF/OFF"},
};

std::set<std::pair<int, int>> support_of(const std::string& pattern) {
    std::set<std::pair<int, int>> s;
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 3; ++col)
            if (pattern[4 * row + col] == 'F') s.insert({col, row});
    return s;
}

Outcome newton_diagrams() {
    static const char* cols[] = {"M", "Z", "P"};
    Tally t;
    int synthetic = 0;
    for (auto& f : class_figures) {
        std::string pat = f.pattern;
        int wild = static_cast<int>(std::count(pat.begin(), pat.end(), 'A'));
        for (unsigned mask = 0; mask < (1u << wild); ++mask) {
            std::vector<RatFun> c[3];
            for (auto& v : c) v.assign(3, RatFun(0));
            std::set<std::pair<int, int>> support;
            unsigned bit = 0;
            for (int row = 0; row < 3; ++row)
                for (int col = 0; col < 3; ++col) {
                    char ch = pat[4 * row + col];
                    if (ch == 'F' || (ch == 'A' && ((mask >> bit++) & 1))) {
                        std::string v = std::string("c") + cols[col] + std::to_string(row);
                        c[col][row] = R("(" + v + " + q)/(1 - t*" + v + ")");
                        support.insert({col, row});
                    }
                }
            QDiffEq eq{UPoly(c[2]), UPoly(c[1]), UPoly(c[0])};
            ++synthetic;
            t.check(newton_diagram(eq).filled == support, std::string(f.name) + " support");
            t.check(classify(eq).cls == f.cls, std::string(f.name) + " class");
        }
    }
    for (auto& [id, pat] : catalog_figures) {
        Catalog c = parse_murata_family(id) ? Catalog::Murata : Catalog::KNY;
        t.check(newton_diagram(derive(c, id)).filled == support_of(pat), std::string(id) + " derived support");
        QDiffEq ref = c == Catalog::Murata ? reference_equation(*parse_murata_family(id))
                                           : reference_equation(*parse_kny_family(id));
        t.check(newton_diagram(ref).filled == support_of(pat), std::string(id) + " reference support");
    }
    return t.outcome("14 catalog figures, 14 class figures via " + std::to_string(synthetic) + " synthetic equations");
}

// ---------------------------------------------------------------- 6

Outcome local_exponents() {
    Tally t;
    QDiffEq eq = derive(Catalog::Murata, "A4");
    CharData z = char_exponents(eq, Location::Zero);
    RatFun e2 = R("a1"), e1 = R("th1+th2").substitute(a4_constraint()), e0 = R("-k1*k2*a2*a3");
    t.check(!z.c2.is_zero() && z.c2 * e1 == z.c1 * e2 && z.c2 * e0 == z.c0 * e2, "zero polynomial not proportional");
    CharData i = char_exponents(eq, Location::Infinity);
    t.check(i.root_count == 1, "infinity root count");
    t.check(i.symbolic_roots.size() == 1 && i.symbolic_roots[0] == R("q/k2"), "infinity root");
    return t.outcome("A4 at zero and infinity");
}

// ---------------------------------------------------------------- 7

std::vector<QuadNumber> values(const UPoly& u, const Bindings& b) {
    std::vector<QuadNumber> out;
    for (auto& c : u.coeffs()) out.push_back(QuadNumber(c.eval(b)));
    return out;
}

std::vector<QuadNumber> mul(const std::vector<QuadNumber>& a, const std::vector<QuadNumber>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<QuadNumber> r(a.size() + b.size() - 1, QuadNumber(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// P s f_q + Z f + M s^-1 f_{1/q} as a polynomial in x, linear in c_0..c_N;
// the x^1..x^N equations with c_0 = 1 solved by Gaussian elimination.
std::optional<std::vector<QuadNumber>> dense_oracle(const QDiffEq& eq, const Bindings& b, const QuadNumber& s,
                                                    int N) {
    QuadNumber q(b.at(q_symbol()));
    auto P = values(eq.P, b), Z = values(eq.Z, b), M = values(eq.M, b);
    std::vector<std::vector<QuadNumber>> A(N + 1, std::vector<QuadNumber>(N + 1, QuadNumber(0)));
    for (int n = 0; n <= N; ++n) {
        std::vector<QuadNumber> unit(n + 1, QuadNumber(0));
        unit[n] = QuadNumber(1);
        auto fq = unit, fm = unit;
        fq[n] = s * q.pow(n);
        fm[n] = s.inverse() * q.pow(-n);
        auto t1 = mul(P, fq), t2 = mul(Z, unit), t3 = mul(M, fm);
        for (int m = 0; m <= N; ++m) {
            QuadNumber v(0);
            if (m < (int)t1.size()) v += t1[m];
            if (m < (int)t2.size()) v += t2[m];
            if (m < (int)t3.size()) v += t3[m];
            A[m][n] = v;
        }
    }
    std::vector<std::vector<QuadNumber>> G(N, std::vector<QuadNumber>(N + 1, QuadNumber(0)));
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) G[i][j] = A[i + 1][j + 1];
        G[i][N] = -A[i + 1][0];
    }
    for (int col = 0; col < N; ++col) {
        int piv = col;
        while (piv < N && G[piv][col].is_zero()) ++piv;
        if (piv == N) return std::nullopt;
        std::swap(G[piv], G[col]);
        for (int i = 0; i < N; ++i) {
            if (i == col || G[i][col].is_zero()) continue;
            QuadNumber f = G[i][col] / G[col][col];
            for (int j = col; j <= N; ++j) G[i][j] -= f * G[col][j];
        }
    }
    std::vector<QuadNumber> c{QuadNumber(1)};
    for (int i = 0; i < N; ++i) c.push_back(G[i][N] / G[i][i]);
    return c;
}

// P = f pt, M = f mt, Z = -(pt f(qx) + mt f(x/q)) has the polynomial solution f.
QDiffEq engineered(const UPoly& f, const UPoly& pt, const UPoly& mt) {
    RatFun q(q_symbol());
    UPoly z = -(pt * f.dilate(q) + mt * f.dilate(q.inverse()));
    return QDiffEq(f * pt, z, f * mt);
}

Outcome series_oracle() {
    std::mt19937 rng(20261016);
    Tally t;
    std::uniform_int_distribution<long> big(1, 997), sign(0, 1), qn(1, 996);
    auto draw = [&] { return Rational(big(rng) * (sign(rng) ? 1 : -1), big(rng)); };
    int exact_cases = 0;
    // Recurrence against the dense solve.
    for (auto& [c, id] : catalog()) {
        QDiffEq eq = derive(c, id);
        CharData cd = char_exponents(eq, Location::Zero);
        for (int k = 0; k < 3; ++k) {
            Bindings b;
            for (auto s : eq.parameters()) b[s] = draw();
            b[q_symbol()] = Rational(qn(rng), 997);
            for (int r = 0; r < cd.root_count; ++r) {
                ExactSeries sol = series_solution(eq, b, r, 10);
                auto oracle = dense_oracle(eq, b, sol.s, 10);
                bool same = oracle && sol.c.size() == 11;
                for (int n = 0; same && n <= 10; ++n) same = sol.c[n] == (*oracle)[n];
                t.check(same, id + " recurrence != dense solve");
                ++exact_cases;
            }
        }
    }
    // Engineered polynomial solutions: exact residual zero.
    std::uniform_int_distribution<long> small(-9, 9), den(1, 7);
    auto rs = [&] { return Rational(small(rng), den(rng)).str(); };
    for (int k = 0; k < 10; ++k) {
        UPoly f = U({"1", rs(), rs(), "1"});
        QDiffEq eq = engineered(f, U({"2", "1"}), U({"-5", rs(), "1"}));
        Bindings b = {{q_symbol(), Rational(big(rng) % 9 + 1, 11)}};
        auto roots = char_roots(char_exponents(eq, Location::Zero), b);
        int idx = -1;
        for (int i = 0; i < static_cast<int>(roots.size()); ++i)
            if (roots[i] == QuadNumber(1)) idx = i;
        t.check(idx >= 0, "engineered case lacks the root s = 1");
        if (idx < 0) continue;
        ExactSeries sol = series_solution(eq, b, idx, 30);
        t.check(residual_exact(sol, Rational(1, 20)).is_zero(), "engineered residual not exactly zero");
    }
    // Float residuals over every catalog equation with a root at zero.
    std::vector<std::string> failing;
    int float_cases = 0;
    std::uniform_int_distribution<long> n(5, 10);
    for (auto& [c, id] : catalog()) {
        QDiffEq eq = derive(c, id);
        CharData cd = char_exponents(eq, Location::Zero);
        bool bad = false;
        for (int k = 0; k < 3; ++k) {
            Bindings b;
            for (auto s : eq.parameters()) b[s] = Rational(n(rng), n(rng));
            b[q_symbol()] = Rational(9, 10);
            for (int r = 0; r < cd.root_count; ++r) {
                ++float_cases;
                double rel = relative_residual(series_solution_float(eq, b, r, 30), 0.05);
                bool ok = std::isfinite(rel) && rel < 1e-12;
                std::ostringstream note;
                note << id << " float relative residual " << std::setprecision(2) << rel << " ("
                     << regularity_name(cd.regularity) << ")";
                t.check(ok, note.str());
                bad = bad || !ok;
            }
        }
        if (bad) failing.push_back(id);
    }
    std::string f;
    for (auto& s : failing) f += (f.empty() ? "" : ",") + s;
    return t.outcome(std::to_string(exact_cases) + " exact oracle cases, 10 engineered, " +
                     std::to_string(float_cases) + " float cases" + (f.empty() ? "" : ", float failures in " + f));
}

// ---------------------------------------------------------------- 8

cd horner(const std::vector<cd>& c, cd x) {
    cd r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

std::vector<cd> numeric(const UPoly& u, const Bindings& v) {
    std::vector<cd> out;
    for (auto& c : u.coeffs()) out.push_back(c.eval(v).to_double());
    return out;
}

Outcome gauge_transport() {
    Tally t;
    QDiffEq a0g20 = E({"1"}, {"-b0", "-b1"}, {"g", "-g*(h1 + h2)", "g*h1*h2"});
    QDiffEq a10c10 = E({"1", "-q*h1"}, {"-b0", "-b1"}, {"g", "-g*h2"});
    QDiffEq out = gauge_move_factor(a0g20, MoveKind::Pochhammer, R("h1"));
    t.check(out.P == a10c10.P && out.Z == a10c10.Z && out.M == a10c10.M, "hypergeometric pair");

    std::mt19937 rng(8);
    std::uniform_int_distribution<int> d(1, 9);
    const double qd = 1.0 / 3.0;
    double worst = 0;
    for (int trial = 0; trial < 10; ++trial) {
        Bindings v = {{q_symbol(), Rational(1, 3)}, {Symbol("alpha"), Rational(d(rng), d(rng) + 2)}};
        for (const char* s : {"c1", "c2", "d0", "e0"}) v[Symbol(s)] = Rational(d(rng) - 5, d(rng));
        const double ad = v[Symbol("alpha")].to_double();
        UPoly f = U({"1", "c1", "c2"});
        auto fn = numeric(f, v);
        for (MoveKind kind : {MoveKind::Pochhammer, MoveKind::Theta}) {
            UPoly factor = kind == MoveKind::Pochhammer ? U({"1", "-alpha"}) : U({"0", "alpha"});
            QDiffEq eq = engineered(f, U({"d0", "1"}), factor * U({"e0", "1"}));
            QDiffEq moved = gauge_move_factor(eq, kind, R("alpha"));
            auto P = numeric(moved.P, v), Z = numeric(moved.Z, v), M = numeric(moved.M, v);
            auto g = [&](cd y) { return horner(fn, y) * eval_special(kind, qd * ad * y, qd, 60); };
            for (double x : {0.3, 0.9, 1.7}) {
                cd a = horner(P, x) * g(qd * x), b = horner(Z, x) * g(x), c = horner(M, x) * g(x / qd);
                double rel = std::abs(a + b + c) / std::max({std::abs(a), std::abs(b), std::abs(c)});
                worst = std::max(worst, rel);
                t.check(rel < 1e-10, "transport residual " + std::to_string(rel));
            }
        }
    }
    std::ostringstream os;
    os << "hypergeometric pair exact; transport worst relative residual " << worst;
    return t.outcome(os.str());
}

// ---------------------------------------------------------------- 9

Outcome q_to_one() {
    Tally t;
    std::ostringstream os;
    const std::set<OdeClass> required = {OdeClass::HE, OdeClass::CHE, OdeClass::BHE, OdeClass::DHE};
    std::set<OdeClass> seen;
    for (auto& id : preset_ids()) {
        Preset p = preset(id);
        LimitData b = limit_coefficients(p.family);
        t.check(corollary_holds(p.family, b), id + " corollary");
        for (int k = 0; k < 3; ++k) {
            RatFun at0[3];
            for (int s = 0; s < 3; ++s) at0[s] = p.family.at(static_cast<Sigma>(s), k).substitute({{eps_symbol(), RatFun(0)}});
            t.check(at0[0] == RatFun(b.b[k]) && at0[2] == RatFun(b.b[k]) && at0[1] == RatFun(Rational(-2) * b.b[k]),
                    id + " (b, -2b, b) pattern");
        }
        OdeClass got = classify_ode(emit_ode(b)).cls;
        t.check(got == p.expected, id + " class " + ode_class_name(got));
        seen.insert(got);
        double d2 = crosscheck(p.family, Rational(1, 100), p.xs, p.terms);
        double d3 = crosscheck(p.family, Rational(1, 1000), p.xs, p.terms);
        double ratio = d2 / d3;
        t.check(ratio >= 5 && ratio <= 20, id + " ratio " + std::to_string(ratio));
        os << id << "->" << ode_class_name(got) << " ratio " << std::setprecision(4) << ratio << ", ";
    }
    for (auto c : required) t.check(seen.count(c) > 0, std::string("no preset for ") + ode_class_name(c));
    std::string s = os.str();
    return t.outcome(s.substr(0, s.size() - 2));
}

// ---------------------------------------------------------------- 10

QDiffEq random_equation(std::mt19937& rng, bool symbolic) {
    std::uniform_int_distribution<int> coin(0, 3), n(-20, 20), d(1, 9);
    const char* names[] = {"q", "a1", "k2", "th1"};
    auto rf = [&] {
        RatFun num(Rational(n(rng), d(rng))), den(1);
        if (!symbolic) return num;
        for (const char* s : names) {
            int e = coin(rng);
            if (e == 1) num = num * RatFun(Symbol(s)) + RatFun(Rational(n(rng)));
            if (e == 2) den = den * (RatFun(Symbol(s)) + RatFun(Rational(d(rng))));
        }
        return num / den;
    };
    std::vector<RatFun> P, Z, M;
    for (int k = 0; k < 3; ++k) {
        P.push_back(coin(rng) ? rf() : RatFun());
        Z.push_back(rf());
        M.push_back(coin(rng) ? rf() : RatFun());
    }
    if (P[0].is_zero()) P[0] = RatFun(1);
    if (M[0].is_zero()) M[0] = RatFun(2);
    return QDiffEq(UPoly(P), UPoly(Z), UPoly(M));
}

bool same_equation(const QDiffEq& a, const QDiffEq& b) {
    for (Shift s : {Shift::M, Shift::Z, Shift::P})
        for (int k = 0; k <= 3; ++k)
            if (!ratfun_eq(a.coeff(s, k), b.coeff(s, k))) return false;
    return a.variable == b.variable;
}

HeunParams random_params(OdeClass cls, std::mt19937& rng) {
    std::uniform_int_distribution<long> n(-9, 9), d(1, 4);
    for (;;) {
        std::vector<QuadNumber> v;
        auto names = param_names(cls);
        for (std::size_t i = 0; i < names.size(); ++i) v.push_back(QuadNumber(Rational(n(rng), d(rng))));
        if (cls == OdeClass::HE) {
            if (v[0].a() < v[1].a()) std::swap(v[0], v[1]);
            v[4] = v[0] + v[1] + QuadNumber(1) - v[2] - v[3];
            if (v[5].is_zero() || v[5] == QuadNumber(1) || (v[2].is_zero() && v[6].is_zero())) continue;
        }
        if (cls == OdeClass::CHE && (v[1].is_zero() || (v[2].is_zero() && v[4].is_zero()))) continue;
        if (cls == OdeClass::BHE && v[1].is_zero() && v[3].is_zero()) continue;
        if (cls == OdeClass::DHE && v[2].is_zero()) continue;
        HeunParams p;
        p.cls = cls;
        for (std::size_t i = 0; i < names.size(); ++i) p.values.push_back({names[i], v[i]});
        return p;
    }
}

Outcome round_trips() {
    Tally t;
    std::mt19937 rng(10);
    // Gauge inverses.
    int gauges = 0;
    std::uniform_int_distribution<int> kind(0, 5), pw(-3, 3), st(1, 2);
    for (int i = 0; i < 120; ++i) {
        QDiffEq eq = random_equation(rng, true);
        GaugeRecord g;
        switch (kind(rng)) {
            case 0: g = PowerGauge{R("q").pow(pw(rng))}; break;
            case 1:
                eq.M = eq.M * U({"1", "-h"});
                g = MoveGauge{MoveKind::Pochhammer, R("h")};
                break;
            case 2:
                eq.M = eq.M * U({"0", "h"});
                g = MoveGauge{MoveKind::Theta, R("h")};
                break;
            case 3: {
                std::uniform_int_distribution<int> c(-9, 9);
                g = LinearGauge{UPoly(std::vector<RatFun>{RatFun(c(rng)), RatFun(1)}),
                                UPoly(std::vector<RatFun>{RatFun(1), RatFun(Rational(c(rng), 4))})};
                break;
            }
            case 4: g = InvertGauge{}; break;
            default: g = RebaseGauge{st(rng)}; break;
        }
        QDiffEq back = apply_gauge(apply_gauge(eq, g), inverse_gauge(g));
        t.check(proportional(back, eq), "gauge " + describe(g));
        ++gauges;
    }
    // Serialization.
    int docs = 0;
    for (int i = 0; i < 120; ++i) {
        QDiffEq eq = random_equation(rng, true);
        t.check(same_equation(equation_from_json(json::parse(equation_to_json(eq).dump())), eq), "serialization");
        ++docs;
    }
    for (auto& [c, id] : catalog()) {
        QDiffEq eq = derive(c, id);
        t.check(same_equation(equation_from_json(json::parse(equation_to_json(eq).dump())), eq), id + " serialization");
        ++docs;
    }
    // Heun parameters through the polynomial form and back.
    int heun = 0;
    for (OdeClass cls : {OdeClass::HE, OdeClass::CHE, OdeClass::BHE, OdeClass::DHE, OdeClass::THE})
        for (int i = 0; i < 100; ++i) {
            HeunParams p = random_params(cls, rng);
            MatchResult m = match_class(to_operator(p));
            t.check(m.params && *m.params == p, "odeheun " + p.str() + (m.params ? "" : ": " + m.obstruction));
            ++heun;
        }

    return t.outcome(std::to_string(gauges) + " gauge, " + std::to_string(docs) + " serialization, " +
                     std::to_string(heun) + " odeheun cases");
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"Lax invariants", lax_invariants},
        {"table reproduction", table_reproduction},
        {"omega cancellation", omega_cancellation},
        {"classification vectors", classification_vectors},
        {"Newton diagrams", newton_diagrams},
        {"local exponents", local_exponents},
        {"series oracle", series_oracle},
        {"gauge transport", gauge_transport},
        {"q -> 1 crosscheck", q_to_one},
        {"round trips", round_trips},
    };
    int failed = 0, i = 0;
    for (auto& [name, run] : criteria) {
        ++i;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::ostringstream os;
        os.precision(2);
        os << std::fixed << secs;
        std::cout << "criterion " << i << " " << (o.pass ? "PASS" : "FAIL") << " [" << name << "] " << o.detail << " ("
                  << os.str() << " s)" << std::endl;
    }
    return failed ? 1 : 0;
}
