#include "qheun/climit.hpp"

#include "qheun/errors.hpp"
#include "qheun/gauge.hpp"
#include "qheun/lax.hpp"
#include "qheun/parser.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qheun {

Symbol eps_symbol() {
    static const Symbol e("eps");
    return e;
}

const char* sigma_name(Sigma s) {
    switch (s) {
        case Sigma::Minus: return "minus";
        case Sigma::Zero: return "zero";
        case Sigma::Plus: return "plus";
    }
    return "?";
}

QDiffEq EpsilonFamily::equation() const {
    auto poly = [&](Sigma s) { return UPoly(std::vector<RatFun>{at(s, 0), at(s, 1), at(s, 2)}); };
    return QDiffEq(poly(Sigma::Plus), poly(Sigma::Zero), poly(Sigma::Minus));
}

EpsilonFamily EpsilonFamily::from_equation(const QDiffEq& eq, const std::map<Symbol, RatFun>& bindings) {
    std::map<Symbol, RatFun> b = bindings;
    b[q_symbol()] = RatFun(1) + RatFun(eps_symbol());
    QDiffEq e = eq.substitute(b);
    if (e.degree() > 2) throw InputError("family coefficients must have degree at most 2 in x");
    EpsilonFamily fam;
    for (Sigma s : {Sigma::Minus, Sigma::Zero, Sigma::Plus}) {
        Shift sh = s == Sigma::Minus ? Shift::M : (s == Sigma::Zero ? Shift::Z : Shift::P);
        for (int k = 0; k < 3; ++k) {
            RatFun c = e.coeff(sh, k);
            for (Symbol v : c.variables())
                if (v != eps_symbol()) throw InputError("parameter '" + v.name() + "' is not bound");
            fam.at(s, k) = c;
        }
    }
    return fam;
}

namespace {

Rational limit_value(const RatFun& f, const std::string& what, int order) {
    RatFun r;
    try {
        r = limit_at_zero(f, eps_symbol());
    } catch (const DivergesAtZero&) {
        throw LimitDiverges(what + " diverges as eps -> 0 (order " + std::to_string(order) + ")");
    }
    if (!r.is_constant()) throw UnboundParameter("limit of " + what + " is not a number: " + r.str());
    return r.constant_value();
}

std::string entry(Sigma s, int k) { return std::string("a[") + sigma_name(s) + "][" + std::to_string(k) + "]"; }

}  // namespace

LimitData limit_coefficients(const EpsilonFamily& fam) {
    const RatFun e(eps_symbol());
    LimitData b;
    for (int k = 0; k < 3; ++k) {
        for (Sigma s : {Sigma::Minus, Sigma::Zero, Sigma::Plus}) limit_value(fam.at(s, k), entry(s, k), 0);
        const RatFun &am = fam.at(Sigma::Minus, k), &a0 = fam.at(Sigma::Zero, k), &ap = fam.at(Sigma::Plus, k);
        std::string ks = std::to_string(k);
        b.b[k] = limit_value((ap + am) / RatFun(2), "(a[plus][" + ks + "] + a[minus][" + ks + "])/2", 0);
        b.b1[k] = limit_value((ap - am) / e, "(a[plus][" + ks + "] - a[minus][" + ks + "])/eps", 1);
        b.b0[k] = limit_value((am + ap + a0) / (e * e), "(a[minus][" + ks + "] + a[plus][" + ks + "] + a[zero][" + ks + "])/eps^2", 2);
    }
    if (!corollary_holds(fam, b)) throw InvariantViolation("limit corollary failed");
    return b;
}

bool corollary_holds(const EpsilonFamily& fam, const LimitData& b) {
    const std::map<Symbol, RatFun> zero = {{eps_symbol(), RatFun(0)}};
    for (int k = 0; k < 3; ++k) {
        if (!(fam.at(Sigma::Minus, k).substitute(zero) == RatFun(b.b[k]))) return false;
        if (!(fam.at(Sigma::Zero, k).substitute(zero) == RatFun(Rational(-2) * b.b[k]))) return false;
        if (!(fam.at(Sigma::Plus, k).substitute(zero) == RatFun(b.b[k]))) return false;
    }
    return true;
}

int qpoly_degree(const QPoly& p) {
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
        if (!p[k].is_zero()) return k;
    return -1;
}

int qpoly_valuation(const QPoly& p) {
    for (std::size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) return static_cast<int>(k);
    return -1;
}

QuadNumber qpoly_eval(const QPoly& p, const QuadNumber& x) {
    QuadNumber r;
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) r = r * x + p[k];
    return r;
}

std::complex<double> qpoly_eval(const QPoly& p, std::complex<double> x) {
    std::complex<double> r;
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) r = r * x + p[k].to_complex();
    return r;
}

namespace {

QPoly trimmed(QPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    return trimmed(r);
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trimmed(r);
}

QPoly scale(const QPoly& a, const QuadNumber& c) {
    QPoly r = a;
    for (auto& v : r) v *= c;
    return trimmed(r);
}

QPoly shift(const QPoly& a, int k) {
    if (a.empty()) return {};
    QPoly r(k, QuadNumber());
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

QPoly derivative(const QPoly& a) {
    QPoly r;
    for (std::size_t k = 1; k < a.size(); ++k) r.push_back(a[k] * QuadNumber(static_cast<long>(k)));
    return trimmed(r);
}

// Order of vanishing of p at x = a (p nonzero).
int order_at(QPoly p, const QuadNumber& a) {
    int m = 0;
    while (!p.empty() && qpoly_eval(p, a).is_zero()) {
        p = derivative(p);
        ++m;
    }
    return m;
}

const Rational& nb(const std::array<Rational, 3>& v, int k) { return v[k]; }

}  // namespace

const char* ode_class_name(OdeClass c) {
    switch (c) {
        case OdeClass::HE: return "HE";
        case OdeClass::CHE: return "CHE";
        case OdeClass::ReducedCHE: return "ReducedCHE";
        case OdeClass::BHE: return "BHE";
        case OdeClass::DHE: return "DHE";
        case OdeClass::ReducedDHE: return "ReducedDHE";
        case OdeClass::DoublyReducedDHE: return "DoublyReducedDHE";
        case OdeClass::THE: return "THE";
        case OdeClass::Other: return "Other";
    }
    return "?";
}

std::string Singularity::str() const {
    std::string s = infinite ? "inf" : at.str();
    if (regular()) return s + " regular";
    return s + " irregular rank " + rank.str() + (ramified() ? " ramified" : "");
}

std::string qpoly_str(const QPoly& p, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (int k = qpoly_degree(p); k >= 0; --k) {
        const QuadNumber& c = p[k];
        if (c.is_zero()) continue;
        bool neg = c.is_rational() && c.a().sign() < 0;
        QuadNumber m = neg ? -c : c;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        bool unit = m.is_rational() && m.a().is_one();
        if (!m.is_rational()) os << "(" << m.str() << ")";
        else if (!unit || k == 0) os << m.str();
        if (k >= 1) os << (unit ? "" : "*") << var;
        if (k >= 2) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

std::string HeunODE::str(const std::string& var) const {
    return "(" + qpoly_str(p[2], var) + ")*g'' + (" + qpoly_str(p[1], var) + ")*g' + (" + qpoly_str(p[0], var) +
           ")*g = 0";
}

HeunODE emit_ode(const LimitData& b) {
    bool all = true;
    for (int k = 0; k < 3; ++k) all = all && b.b[k].is_zero() && b.b1[k].is_zero() && b.b0[k].is_zero();
    if (all) throw AllZero();
    HeunODE ode;
    ode.source = b;
    ode.p[2] = trimmed({0, 0, b.b[0], b.b[1], b.b[2]});
    ode.p[1] = trimmed({0, b.b1[0] + b.b[0], b.b1[1] + b.b[1], b.b1[2] + b.b[2]});
    ode.p[0] = trimmed({b.b0[0], b.b0[1], b.b0[2]});
    ode.accessory = b.b0[1];
    return ode;
}

HeunODE strip_ode(const HeunODE& ode) {
    HeunODE r = ode;
    int v = -1;
    for (auto& q : r.p) {
        int w = qpoly_valuation(q);
        if (w >= 0) v = v < 0 ? w : std::min(v, w);
    }
    if (v < 0) return r;
    for (auto& q : r.p) q = trimmed(q.size() > static_cast<std::size_t>(v) ? QPoly(q.begin() + v, q.end()) : QPoly{});
    return r;
}

HeunODE gauge_ode(const HeunODE& ode, const QuadNumber& rho) {
    // x^2 times the operator on h, then stripped.
    HeunODE r = ode;
    const QPoly &p2 = ode.p[2], &p1 = ode.p[1], &p0 = ode.p[0];
    r.p[2] = shift(p2, 2);
    r.p[1] = add(shift(p1, 2), scale(shift(p2, 1), QuadNumber(2) * rho));
    r.p[0] = add(add(shift(p0, 2), scale(p2, rho * (rho - QuadNumber(1)))), scale(shift(p1, 1), rho));
    r.rho = ode.rho + rho;
    return strip_ode(r);
}

HeunODE affine_ode(const HeunODE& ode, const QuadNumber& a, const QuadNumber& lambda) {
    // p(a + lambda z); d/dx = lambda^-1 d/dz. Multiplied through by lambda^2.
    auto compose = [&](const QPoly& p) {
        QPoly r, pw = {QuadNumber(1)};
        const QPoly lin = trimmed({a, lambda});
        for (const auto& c : p) {
            r = add(r, scale(pw, c));
            pw = mul(pw, lin);
        }
        return r;
    };
    HeunODE r = ode;
    r.p[2] = compose(ode.p[2]);
    r.p[1] = scale(compose(ode.p[1]), lambda);
    r.p[0] = scale(compose(ode.p[0]), lambda * lambda);
    return r;
}

std::vector<Singularity> singularities(const HeunODE& ode) {
    const QPoly &p2 = ode.p[2], &p1 = ode.p[1], &p0 = ode.p[0];
    int d2 = qpoly_degree(p2);
    if (d2 < 0) throw DegenerateEquation("no second-order term");
    std::vector<std::pair<QuadNumber, int>> pts;
    int v = qpoly_valuation(p2);
    if (v > 0) pts.push_back({QuadNumber(0), v});
    QPoly rest(p2.begin() + v, p2.end());
    rest = trimmed(rest);
    int r = qpoly_degree(rest);
    if (r == 1) {
        pts.push_back({-rest[0] / rest[1], 1});
    } else if (r == 2) {
        if (!rest[0].is_rational() || !rest[1].is_rational() || !rest[2].is_rational())
            throw DomainError("singular points need a second quadratic extension");
        Rational c0 = rest[0].a(), c1 = rest[1].a(), c2 = rest[2].a();
        Rational disc = c1 * c1 - Rational(4) * c2 * c0;
        if (disc.is_zero()) {
            pts.push_back({QuadNumber(-c1 / (Rational(2) * c2)), 2});
        } else {
            QuadNumber s = QuadNumber::sqrt(disc), den(Rational(2) * c2);
            pts.push_back({(QuadNumber(-c1) + s) / den, 1});
            pts.push_back({(QuadNumber(-c1) - s) / den, 1});
        }
    } else if (r > 2) {
        throw DomainError("more than two nonzero singular points");
    }
    std::vector<Singularity> out;
    for (auto& [a, m] : pts) {
        if (m == 1) {
            out.push_back({false, a, m, Rational(0)});
            continue;
        }
        // Pole orders of p1/p2 and p0/p2.
        int o1 = p1.empty() ? 1 << 20 : order_at(p1, a), o0 = p0.empty() ? 1 << 20 : order_at(p0, a);
        Rational rank = std::max({Rational(0), Rational(m - o1 - 1), Rational(m - o0, 2) - Rational(1)});
        out.push_back({false, a, m, rank});
    }
    int d1 = qpoly_degree(p1), d0 = qpoly_degree(p0);
    Rational rank(0);
    if (d1 >= 0) rank = std::max(rank, Rational(d1 - d2 + 1));
    if (d0 >= 0) rank = std::max(rank, Rational(d0 - d2, 2) + Rational(1));
    out.push_back({true, QuadNumber(), 0, rank});
    return out;
}

namespace {

BData<QuadNumber> lift(const LimitData& b) {
    BData<QuadNumber> r;
    for (int k = 0; k < 3; ++k) {
        r.b[k] = b.b[k];
        r.b1[k] = b.b1[k];
        r.b0[k] = b.b0[k];
    }
    return r;
}

}  // namespace

HeunODE classify_ode(const HeunODE& ode) {
    if (!ode.source) throw InputError("classify_ode needs the limit data of the operator");
    const LimitData& b = *ode.source;
    BData<QuadNumber> n = lift(b);
    QuadNumber rho;
    const Rational &b00 = b.b0[0], &b01 = b.b1[0], &b0 = b.b[0];
    if (!b00.is_zero()) {
        if (!b0.is_zero()) {
            QuadNumber s = QuadNumber::sqrt(b01 * b01 - Rational(4) * b0 * b00);
            rho = (QuadNumber(-b01) + s) / QuadNumber(Rational(2) * b0);
        } else if (!b01.is_zero()) {
            rho = QuadNumber(-b00 / b01);
        } else {
            throw Unclassifiable("b_{0,0} is nonzero while b_0 = b_{0,1} = 0; no x^rho gauge removes it");
        }
        for (int k = 0; k < 3; ++k) {
            n.b1[k] = QuadNumber(b.b1[k]) + QuadNumber(2) * rho * QuadNumber(b.b[k]);
            n.b0[k] = QuadNumber(b.b0[k]) + rho * rho * QuadNumber(b.b[k]) + rho * QuadNumber(b.b1[k]);
        }
    }
    const Rational &b2 = nb(b.b, 2), &b1 = nb(b.b, 1);
    HeunODE r;
    r.source = b;
    r.rho = rho;
    if (!b2.is_zero() && !b0.is_zero()) {
        if ((b1 * b1 - Rational(4) * b0 * b2).is_zero())
            throw Unclassifiable("b_1^2 = 4 b_0 b_2: the finite singular points coincide");
        r.cls = OdeClass::HE;
    } else if (b2.is_zero() && !b1.is_zero() && !b0.is_zero()) {
        r.cls = n.b1[2].is_zero() ? OdeClass::ReducedCHE : OdeClass::CHE;
    } else if (b2.is_zero() && b1.is_zero() && !b0.is_zero()) {
        r.cls = OdeClass::BHE;
    } else if (b2.is_zero() && b0.is_zero() && !b1.is_zero()) {
        bool inf = n.b1[2].is_zero(), zero = n.b1[0].is_zero();
        r.cls = inf && zero ? OdeClass::DoublyReducedDHE : (inf || zero ? OdeClass::ReducedDHE : OdeClass::DHE);
    } else if (b2.is_zero() && b1.is_zero() && b0.is_zero()) {
        throw Unclassifiable("b_0 = b_1 = b_2 = 0: the limit has no second-order term");
    } else {
        throw Unclassifiable("b_2 is nonzero while b_0 = 0");
    }
    r.p[2] = trimmed({0, 0, n.b[0], n.b[1], n.b[2]});
    r.p[1] = trimmed({0, n.b1[0] + n.b[0], n.b1[1] + n.b[1], n.b1[2] + n.b[2]});
    r.p[0] = trimmed({n.b0[0], n.b0[1], n.b0[2]});
    r = strip_ode(r);
    r.accessory = n.b0[1];
    r.singularities = singularities(r);
    return r;
}

std::vector<QuadNumber> exponents_at_zero(const HeunODE& ode) {
    HeunODE s = strip_ode(ode);
    int v2 = qpoly_valuation(s.p[2]), v1 = qpoly_valuation(s.p[1]), v0 = qpoly_valuation(s.p[0]);
    int s0 = v2 - 2;
    if (v1 >= 0) s0 = std::min(s0, v1 - 1);
    if (v0 >= 0) s0 = std::min(s0, v0);
    if (s0 != v2 - 2) throw IrregularAtZero("x = 0 is an irregular singular point");
    auto at = [](const QPoly& p, int k) { return k >= 0 && k < static_cast<int>(p.size()) ? p[k] : QuadNumber(); };
    // A k^2 + B k + C
    QuadNumber A = at(s.p[2], s0 + 2), B = at(s.p[1], s0 + 1) - A, C = at(s.p[0], s0);
    if (!A.is_rational() || !B.is_rational() || !C.is_rational())
        throw DomainError("exponents need a second quadratic extension");
    QuadNumber root = QuadNumber::sqrt(B.a() * B.a() - Rational(4) * A.a() * C.a());
    QuadNumber den(Rational(2) * A.a());
    return {(-B + root) / den, (-B - root) / den};
}

namespace {

std::vector<QuadNumber> frobenius(const HeunODE& ode, int N, bool formal) {
    HeunODE s = strip_ode(ode);
    int v2 = qpoly_valuation(s.p[2]), v1 = qpoly_valuation(s.p[1]), v0 = qpoly_valuation(s.p[0]);
    if (v2 < 0) throw DegenerateEquation("no second-order term");
    int s0 = v2 - 2;
    if (v1 >= 0) s0 = std::min(s0, v1 - 1);
    if (v0 >= 0) s0 = std::min(s0, v0);
    if (!formal && s0 != v2 - 2) throw IrregularAtZero("x = 0 is an irregular singular point");
    auto at = [](const QPoly& p, int k) { return k >= 0 && k < static_cast<int>(p.size()) ? p[k] : QuadNumber(); };
    auto F = [&](int t, long k) {
        QuadNumber K(k);
        return at(s.p[2], s0 + 2 + t) * K * (K - QuadNumber(1)) + at(s.p[1], s0 + 1 + t) * K + at(s.p[0], s0 + t);
    };
    if (!F(0, 0).is_zero()) throw DomainError("0 is not an exponent at x = 0");
    int T = 0;
    for (auto& p : s.p) T = std::max(T, qpoly_degree(p) + 2 - (s0 + 2));
    std::vector<QuadNumber> c(N + 1);
    c[0] = QuadNumber(1);
    for (int n = 1; n <= N; ++n) {
        QuadNumber num;
        for (int t = 1; t <= std::min(n, T); ++t) num += F(t, n - t) * c[n - t];
        QuadNumber den = F(0, n);
        if (den.is_zero()) {
            if (!num.is_zero()) throw Resonance("logarithmic term at index " + std::to_string(n), n);
            c[n] = QuadNumber();
        } else {
            c[n] = -num / den;
        }
    }
    return c;
}

std::complex<double> pow_c(std::complex<double> b, std::complex<double> e) { return std::exp(e * std::log(b)); }

}  // namespace

std::vector<QuadNumber> ode_series(const HeunODE& ode, int N) { return frobenius(ode, N, false); }
std::vector<QuadNumber> ode_formal_series(const HeunODE& ode, int N) { return frobenius(ode, N, true); }

double crosscheck(const EpsilonFamily& fam, const Rational& eps, const std::vector<double>& xs, int N) {
    if (eps.sign() <= 0 || Rational(1, 10) < eps) throw InputError("crosscheck needs 0 < eps <= 1/10");
    HeunODE ode = classify_ode(emit_ode(limit_coefficients(fam)));
    std::vector<QuadNumber> h;
    try {
        h = ode_series(ode, N);
    } catch (const IrregularAtZero&) {
        h = ode_formal_series(ode, N);
    }
    QDiffEq eq = fam.equation();
    Bindings v = {{eps_symbol(), eps}, {q_symbol(), Rational(1) + eps}};
    CharData cd = char_exponents(eq, Location::Zero);
    std::vector<QuadNumber> roots = char_roots(cd, v);
    if (roots.empty()) throw DomainError("the q-equation has no exponent at x = 0");
    std::complex<double> target = pow_c(1.0 + eps.to_double(), ode.rho.to_complex());
    int best = 0;
    for (int i = 1; i < static_cast<int>(roots.size()); ++i)
        if (std::abs(roots[i].to_complex() - target) < std::abs(roots[best].to_complex() - target)) best = i;
    ExactSeries qs = series_solution(eq, v, best, N);
    double dev = 0;
    for (double x : xs) {
        std::complex<double> a, b, xp = 1;
        for (int n = 0; n <= N; ++n) {
            a += qs.c[n].to_complex() * xp;
            b += h[n].to_complex() * xp;
            xp *= x;
        }
        dev = std::max(dev, std::abs(a - b));
    }
    return dev;
}

namespace {

RatFun E(const char* text) { return parse_expr(text); }

EpsilonFamily by_expressions(const std::array<std::array<const char*, 3>, 3>& rows) {
    // rows: minus, plus, then the eps^2 remainder w; a[zero] = -(a[minus] + a[plus]) + eps^2 w.
    EpsilonFamily f;
    std::map<Symbol, RatFun> q = {{q_symbol(), RatFun(1) + RatFun(eps_symbol())}};
    for (int k = 0; k < 3; ++k) {
        f.at(Sigma::Minus, k) = E(rows[0][k]).substitute(q);
        f.at(Sigma::Plus, k) = E(rows[1][k]).substitute(q);
        RatFun e(eps_symbol());
        f.at(Sigma::Zero, k) = -(f.at(Sigma::Minus, k) + f.at(Sigma::Plus, k)) + e * e * E(rows[2][k]);
    }
    return f;
}

}  // namespace

std::vector<std::string> preset_ids() { return {"qheun", "A4", "bqheun", "dqheun"}; }

Preset preset(const std::string& id) {
    Preset p;
    p.id = id;
    if (id == "qheun") {
        p.description = "q(x-2)(x-3) g(qx) + (x^2/q - 5x + 6q) g(x/q); accessory remainder x^2 + x/2 - 3/2";
        p.family = by_expressions({{{"6*q", "-5", "1/q"}, {"6*q", "-5*q", "q"}, {"-3/2", "1/2", "1"}}});
        p.expected = OdeClass::HE;
        p.xs = {0.05, 0.1};
    } else if (id == "A4") {
        p.description = "reference A4 equation with k1 = eps, k2 = q(1+eps), a1 = 2(1+eps), a2 = 2, "
                        "a3 = -1/(k1 k2), t = 1, th1 = -2, th2 = -2(1+eps), d = q + 1 - 2 q k1 k2 - eps^2/2";
        const RatFun e(eps_symbol());
        const RatFun q = RatFun(1) + e;
        RatFun k1 = e, k2 = q * (RatFun(1) + e);
        std::map<Symbol, RatFun> b = {
            {sym("k1"), k1},
            {sym("k2"), k2},
            {sym("a1"), RatFun(2) * (RatFun(1) + e)},
            {sym("a2"), RatFun(2)},
            {sym("a3"), RatFun(-1) / (k1 * k2)},
            {sym("t"), RatFun(1)},
            {sym("th1"), RatFun(-2)},
            {sym("th2"), RatFun(-2) * (RatFun(1) + e)},
            {sym("d"), q + RatFun(1) - RatFun(2) * q * k1 * k2 - e * e / RatFun(2)},
        };
        p.family = EpsilonFamily::from_equation(reference_equation(MurataFamily::A4), b);
        p.expected = OdeClass::CHE;
        p.xs = {0.05, 0.1};
    } else if (id == "bqheun") {
        p.description = "g(qx) + (eps x^2 + 2 eps x + 1/q^2) g(x/q); accessory remainder 2x^2 + x - 3";
        p.family = by_expressions({{{"1/q^2", "2*eps", "eps"}, {"1", "0", "0"}, {"-3", "1", "2"}}});
        p.expected = OdeClass::BHE;
        p.xs = {0.05, 0.1};
    } else if (id == "dqheun") {
        p.description = "x g(qx) + (eps x^2 + x/q^3 + eps) g(x/q); accessory remainder 2x^2 + 2x + 1";
        p.family = by_expressions({{{"eps", "1/q^3", "eps"}, {"0", "1", "0"}, {"1", "2", "2"}}});
        p.expected = OdeClass::DHE;
        // Irregular at 0 on both sides: formal series, small x.
        p.xs = {0.01, 0.02};
        p.terms = 20;
    } else {
        throw InputError("unknown preset '" + id + "'");
    }
    return p;
}

}  // namespace qheun
