#include "qheun/gauge.hpp"

#include "qheun/errors.hpp"

#include <cmath>

namespace qheun {

Symbol q_symbol() {
    static const Symbol q("q");
    return q;
}

namespace {

RatFun qr() { return RatFun(q_symbol()); }

QDiffEq scale_pm(const QDiffEq& eq, const RatFun& f) {
    return QDiffEq(eq.P * f, eq.Z, eq.M * f.inverse(), eq.variable);
}

UPoly lcm(const UPoly& a, const UPoly& b) { return a * (b / UPoly::gcd(a, b)); }

// Reduces n/d by their gcd.
void reduce(UPoly& n, UPoly& d) {
    UPoly g = UPoly::gcd(n, d);
    if (g.degree() > 0) {
        n = n / g;
        d = d / g;
    }
}

}  // namespace

QDiffEq gauge_power(const QDiffEq& eq, long lambda) {
    return scale_pm(eq, qr().pow(lambda));
}

QDiffEq gauge_power(const QDiffEq& eq, Symbol s) { return scale_pm(eq, RatFun(s)); }

QDiffEq gauge_rational(const QDiffEq& eq, const UPoly& num, const UPoly& den) {
    if (num.is_zero() || den.is_zero()) throw DomainError("gauge multiplier must be nonzero");
    const RatFun qinv = qr().inverse();
    UPoly pn = eq.P * num, pd = den;
    UPoly mn = eq.M * den.dilate(qinv), md = num.dilate(qinv);
    if (!pn.is_zero()) reduce(pn, pd);
    if (!mn.is_zero()) reduce(mn, md);
    UPoly L = lcm(pd.monic(), md.monic());
    QDiffEq out(pn * (L / pd), eq.Z * L, mn * (L / md), eq.variable);
    return out;
}

QDiffEq gauge_linear(const QDiffEq& eq, const UPoly& p) { return gauge_rational(eq, p, UPoly(1)); }

QDiffEq gauge_move_factor(const QDiffEq& eq, MoveKind kind, const RatFun& alpha) {
    if (alpha.is_zero()) throw DomainError("move factor needs a nonzero alpha");
    UPoly f = kind == MoveKind::Pochhammer ? UPoly::linear(-alpha, RatFun(1))
                                           : UPoly::monomial(alpha, 1);
    UPoly m;
    if (eq.M.is_zero() || !eq.M.exact_div(f, m))
        throw NotDivisible("M is not divisible by " + f.str(eq.variable));
    return QDiffEq(eq.P * f.dilate(qr()), eq.Z, m, eq.variable);
}

QDiffEq invert_variable(const QDiffEq& eq) {
    int D = eq.degree();
    auto rev = [D](const UPoly& u) { return u.is_zero() ? u : u.reverse(D); };
    return QDiffEq(rev(eq.M), rev(eq.Z), rev(eq.P), eq.variable);
}

QDiffEq rebase(const QDiffEq& rel, int steps) {
    RatFun c = qr().pow(-steps);
    return QDiffEq(rel.P.dilate(c), rel.Z.dilate(c), rel.M.dilate(c), rel.variable);
}

std::complex<double> eval_special(MoveKind kind, std::complex<double> x, std::complex<double> q,
                                  unsigned terms) {
    if (!(std::abs(q) < 1.0)) throw DomainError("eval_special needs |q| < 1");
    if (terms == 0) throw DomainError("eval_special needs at least one factor");
    auto poch = [&](std::complex<double> a) {
        std::complex<double> r = 1.0, qk = 1.0;
        for (unsigned k = 0; k < terms; ++k, qk *= q) r *= 1.0 - a * qk;
        return r;
    };
    if (kind == MoveKind::Pochhammer) return poch(x);
    if (x == 0.0) throw DomainError("theta_q is singular at 0");
    return poch(q) * poch(-x) * poch(-q / x);
}

QDiffEq apply_gauge(const QDiffEq& eq, const GaugeRecord& g) {
    return std::visit(
        [&](const auto& r) -> QDiffEq {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, PowerGauge>) {
                return scale_pm(eq, r.factor);
            } else if constexpr (std::is_same_v<T, MoveGauge>) {
                if (!r.inverse) return gauge_move_factor(eq, r.kind, r.alpha);
                UPoly f = r.kind == MoveKind::Pochhammer ? UPoly::linear(-r.alpha, RatFun(1))
                                                         : UPoly::monomial(r.alpha, 1);
                UPoly p;
                if (eq.P.is_zero() || !eq.P.exact_div(f.dilate(qr()), p))
                    throw NotDivisible("P is not divisible by " + f.dilate(qr()).str(eq.variable));
                return QDiffEq(p, eq.Z, eq.M * f, eq.variable);
            } else if constexpr (std::is_same_v<T, LinearGauge>) {
                return gauge_rational(eq, r.num, r.den);
            } else if constexpr (std::is_same_v<T, InvertGauge>) {
                return invert_variable(eq);
            } else {
                return rebase(eq, r.steps);
            }
        },
        g);
}

GaugeRecord inverse_gauge(const GaugeRecord& g) {
    return std::visit(
        [](const auto& r) -> GaugeRecord {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, PowerGauge>) {
                return PowerGauge{r.factor.inverse()};
            } else if constexpr (std::is_same_v<T, MoveGauge>) {
                return MoveGauge{r.kind, r.alpha, !r.inverse};
            } else if constexpr (std::is_same_v<T, LinearGauge>) {
                return LinearGauge{r.den, r.num};
            } else if constexpr (std::is_same_v<T, InvertGauge>) {
                return InvertGauge{};
            } else {
                return RebaseGauge{-r.steps};
            }
        },
        g);
}

std::string describe(const GaugeRecord& g) {
    return std::visit(
        [](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, PowerGauge>) {
                return "power q^lambda = " + r.factor.str();
            } else if constexpr (std::is_same_v<T, MoveGauge>) {
                std::string k = r.kind == MoveKind::Pochhammer ? "pochhammer" : "theta";
                return (r.inverse ? "inverse " : "") + k + " alpha = " + r.alpha.str();
            } else if constexpr (std::is_same_v<T, LinearGauge>) {
                return "linear u(qx)/u(x) = (" + r.num.str() + ")/(" + r.den.str() + ")";
            } else if constexpr (std::is_same_v<T, InvertGauge>) {
                return "invert x -> 1/x";
            } else {
                return "rebase x -> x/q^" + std::to_string(r.steps);
            }
        },
        g);
}

}  // namespace qheun
