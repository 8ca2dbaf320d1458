#include "qheun/odeheun.hpp"

#include "qheun/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qheun {

std::vector<std::string> param_names(OdeClass c) {
    switch (c) {
        case OdeClass::HE: return {"alpha", "beta", "gamma", "delta", "epsilon", "t", "B"};
        case OdeClass::CHE: return {"alpha", "beta", "gamma", "delta", "B"};
        case OdeClass::BHE: return {"alpha", "gamma", "delta", "B"};
        case OdeClass::DHE: return {"alpha", "gamma", "delta", "B"};
        case OdeClass::THE: return {"alpha", "gamma", "B"};
        default: return {};
    }
}

const QuadNumber& HeunParams::get(const std::string& name) const {
    for (auto& [n, v] : values)
        if (n == name) return v;
    throw InputError(std::string("parameter '") + name + "' missing for " + ode_class_name(cls));
}

void HeunParams::set(const std::string& name, const QuadNumber& v) {
    for (auto& [n, w] : values)
        if (n == name) {
            w = v;
            return;
        }
    values.push_back({name, v});
}

std::string HeunParams::str() const {
    std::ostringstream os;
    os << ode_class_name(cls);
    for (auto& n : param_names(cls)) {
        os << " " << n << "=";
        bool found = false;
        for (auto& [m, v] : values)
            if (m == n) {
                os << v.str();
                found = true;
            }
        if (!found) os << "?";
    }
    return os.str();
}

bool operator==(const HeunParams& a, const HeunParams& b) {
    if (a.cls != b.cls) return false;
    for (auto& n : param_names(a.cls))
        if (!(a.get(n) == b.get(n))) return false;
    return true;
}

namespace {

using Q = QuadNumber;

QPoly trimmed(QPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

HeunODE monic(const HeunODE& o) {
    HeunODE s = strip_ode(o);
    int d = qpoly_degree(s.p[2]);
    if (d < 0) throw DegenerateEquation("no second-order term");
    Q inv = s.p[2][d].inverse();
    for (auto& p : s.p) {
        for (auto& c : p) c *= inv;
        p = trimmed(p);
    }
    return s;
}

bool same_operator(const HeunODE& a, const HeunODE& b) {
    HeunODE x = monic(a), y = monic(b);
    for (int i = 0; i < 3; ++i) {
        if (x.p[i].size() != y.p[i].size()) return false;
        for (std::size_t k = 0; k < x.p[i].size(); ++k)
            if (!(x.p[i][k] == y.p[i][k])) return false;
    }
    return true;
}

Q coef(const QPoly& p, int k) { return k < static_cast<int>(p.size()) ? p[k] : Q(); }

bool lex_less(const HeunParams& a, const HeunParams& b) {
    for (auto& n : param_names(a.cls)) {
        auto x = a.get(n).to_complex(), y = b.get(n).to_complex();
        if (x.real() != y.real()) return x.real() < y.real();
        if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
    return false;
}

// Parameters read off a monic operator, checked afterwards by rebuilding.
std::optional<HeunParams> read(OdeClass cls, const HeunODE& g) {
    const QPoly &p2 = g.p[2], &p1 = g.p[1], &p0 = g.p[0];
    HeunParams r;
    r.cls = cls;
    switch (cls) {
        case OdeClass::HE: {
            if (qpoly_degree(p2) != 3) return std::nullopt;
            Q t = -coef(p2, 2) - Q(1);
            Q gamma = qpoly_eval(p1, Q()) / t;
            Q delta = qpoly_eval(p1, Q(1)) / (Q(1) - t);
            Q eps = qpoly_eval(p1, t) / (t * (t - Q(1)));
            Q ab = coef(p0, 1), B = -coef(p0, 0);
            Q S = gamma + delta + eps - Q(1);
            if (!S.is_rational() || !ab.is_rational()) return std::nullopt;
            Q root = Q::sqrt(S.a() * S.a() - Rational(4) * ab.a());
            r.values = {{"alpha", (S + root) / Q(2)}, {"beta", (S - root) / Q(2)}, {"gamma", gamma},
                        {"delta", delta},            {"epsilon", eps},           {"t", t},
                        {"B", B}};
            break;
        }
        case OdeClass::CHE: {
            Q beta = -coef(p1, 2);
            if (beta.is_zero()) return std::nullopt;
            r.values = {{"alpha", -coef(p0, 1) / beta},
                        {"beta", beta},
                        {"gamma", -coef(p1, 0)},
                        {"delta", qpoly_eval(p1, Q(1))},
                        {"B", coef(p0, 0)}};
            break;
        }
        case OdeClass::BHE:
            r.values = {{"alpha", -coef(p0, 1)}, {"gamma", coef(p1, 0)}, {"delta", -coef(p1, 1)}, {"B", coef(p0, 0)}};
            break;
        case OdeClass::DHE:
            r.values = {{"alpha", -coef(p0, 1)}, {"gamma", -coef(p1, 1)}, {"delta", -coef(p1, 0)}, {"B", coef(p0, 0)}};
            break;
        case OdeClass::THE:
            r.values = {{"alpha", coef(p0, 1)}, {"gamma", -coef(p1, 0)}, {"B", coef(p0, 0)}};
            break;
        default: return std::nullopt;
    }
    return r;
}

}  // namespace

HeunODE to_operator(const HeunParams& p) {
    auto v = [&](const char* n) { return p.get(n); };
    HeunODE o;
    o.cls = p.cls;
    switch (p.cls) {
        case OdeClass::HE: {
            Q t = v("t"), g = v("gamma"), d = v("delta"), e = v("epsilon"), a = v("alpha"), b = v("beta");
            if (!(g + d + e == a + b + Q(1)))
                throw ConstraintViolation("HE needs gamma + delta + epsilon = alpha + beta + 1");
            if (t.is_zero() || t == Q(1)) throw ConstraintViolation("HE needs t different from 0 and 1");
            o.p[2] = {Q(), t, -(Q(1) + t), Q(1)};
            o.p[1] = {g * t, -g * (Q(1) + t) - d * t - e, g + d + e};
            o.p[0] = {-v("B"), a * b};
            break;
        }
        case OdeClass::CHE: {
            Q g = v("gamma"), d = v("delta"), b = v("beta");
            o.p[2] = {Q(), Q(-1), Q(1)};
            o.p[1] = {-g, g + d + b, -b};
            o.p[0] = {v("B"), -v("alpha") * b};
            break;
        }
        case OdeClass::BHE:
            o.p[2] = {Q(), Q(1)};
            o.p[1] = {v("gamma"), -v("delta"), Q(-1)};
            o.p[0] = {v("B"), -v("alpha")};
            break;
        case OdeClass::DHE:
            o.p[2] = {Q(), Q(), Q(1)};
            o.p[1] = {-v("delta"), -v("gamma"), Q(-1)};
            o.p[0] = {v("B"), -v("alpha")};
            break;
        case OdeClass::THE:
            o.p[2] = {Q(1)};
            o.p[1] = {-v("gamma"), Q(), Q(-1)};
            o.p[0] = {v("B"), v("alpha")};
            break;
        default: throw InputError(std::string("no Heun display for class ") + ode_class_name(p.cls));
    }
    for (auto& q : o.p) q = trimmed(q);
    o.accessory = v("B");
    o.singularities = singularities(o);
    return o;
}

MatchResult match_class(const HeunODE& in) {
    MatchResult res;
    HeunODE ode;
    std::vector<Singularity> sing;
    try {
        ode = monic(in);
        sing = singularities(ode);
    } catch (const Error& e) {
        res.obstruction = e.what();
        return res;
    }
    std::vector<Singularity> fin(sing.begin(), sing.end() - 1);
    const Singularity& inf = sing.back();
    bool allreg = std::all_of(fin.begin(), fin.end(), [](const Singularity& s) { return s.regular(); });
    auto pattern = [&] {
        std::string s;
        for (auto& x : sing) s += (s.empty() ? "" : ", ") + x.str();
        return s;
    };
    OdeClass cls = OdeClass::Other;
    if (fin.size() == 3 && allreg && inf.regular()) {
        cls = OdeClass::HE;
    } else if (fin.size() == 2 && allreg && !inf.regular()) {
        if (inf.ramified()) res.obstruction = "reduced CHE: the irregular point at infinity is ramified";
        else if (inf.rank == Rational(1)) cls = OdeClass::CHE;
    } else if (fin.size() == 1 && fin[0].multiplicity == 1 && fin[0].regular() && !inf.regular()) {
        if (inf.ramified()) res.obstruction = "reduced BHE: the irregular point at infinity is ramified";
        else if (inf.rank == Rational(2)) cls = OdeClass::BHE;
    } else if (fin.size() == 1 && fin[0].multiplicity == 2 && !inf.regular()) {
        if (fin[0].regular()) res.obstruction = "reduced DHE: the origin is ramified (the double point is regular)";
        else if (fin[0].ramified() || inf.ramified()) res.obstruction = "reduced DHE: a ramified irregular point";
        else if (fin[0].rank == Rational(1) && inf.rank == Rational(1)) cls = OdeClass::DHE;
    } else if (fin.empty() && inf.rank == Rational(3)) {
        cls = OdeClass::THE;
    }
    if (cls == OdeClass::Other) {
        if (res.obstruction.empty()) res.obstruction = "singularity pattern matches no Heun class: " + pattern();
        return res;
    }

    struct Cand {
        Q a, lambda, rho;
        int score;
        HeunParams params;
    };
    std::vector<Cand> cands;
    auto attempt = [&](const Q& a, const Q& lambda) {
        try {
            HeunODE m = monic(affine_ode(ode, a, lambda));
            std::vector<Q> rhos = {Q()};
            if (cls == OdeClass::HE || cls == OdeClass::CHE || cls == OdeClass::BHE) {
                std::vector<Q> ex = exponents_at_zero(m);
                if (!(ex[0].is_zero() || ex[1].is_zero())) rhos = ex;
            }
            for (const Q& rho : rhos) {
                HeunODE g = rho.is_zero() ? m : monic(gauge_ode(m, rho));
                auto p = read(cls, g);
                if (!p || !same_operator(to_operator(*p), g)) continue;
                int score = 2 * !a.is_zero() + !(lambda == Q(1)) + !rho.is_zero();
                cands.push_back({a, lambda, rho, score, *p});
            }
        } catch (const Error&) {
        }
    };
    auto lead = [&](const Q& a, int k) { return coef(monic(affine_ode(ode, a, Q(1))).p[1], k); };
    try {
        switch (cls) {
            case OdeClass::HE:
            case OdeClass::CHE:
                for (std::size_t i = 0; i < fin.size(); ++i)
                    for (std::size_t j = 0; j < fin.size(); ++j)
                        if (i != j) attempt(fin[i].at, fin[j].at - fin[i].at);
                break;
            case OdeClass::BHE: {
                Q r = -lead(fin[0].at, 2).inverse();
                if (!r.is_rational()) break;
                Q l = Q::sqrt(r.a());
                attempt(fin[0].at, l);
                attempt(fin[0].at, -l);
                break;
            }
            case OdeClass::DHE: attempt(fin[0].at, -lead(fin[0].at, 2).inverse()); break;
            case OdeClass::THE: {
                Q k2 = lead(Q(), 2), k1 = lead(Q(), 1);
                Q r = -k2.inverse();
                Rational l;
                if (!r.is_rational() || !rational_cbrt(r.a(), l)) break;
                attempt(-k1 / (Q(2) * k2), Q(l));
                break;
            }
            default: break;
        }
    } catch (const Error&) {
    }
    if (cands.empty()) {
        res.obstruction = std::string("no affine normalization reproduces the ") + ode_class_name(cls) + " form";
        return res;
    }
    auto best = std::min_element(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        if (x.score != y.score) return x.score < y.score;
        return lex_less(x.params, y.params);
    });
    res.params = best->params;
    res.a = best->a;
    res.lambda = best->lambda;
    res.rho = best->rho;
    return res;
}

}  // namespace qheun
