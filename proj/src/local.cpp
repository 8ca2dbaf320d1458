#include "qheun/local.hpp"

#include "qheun/errors.hpp"
#include "qheun/gauge.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace qheun {

QuadNumber::QuadNumber(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d) {
    Rational r;
    if (b_.is_zero() || d_.is_zero()) {
        b_ = Rational(0);
        d_ = Rational(0);
    } else if (rational_sqrt(d_, r)) {
        a_ += b_ * r;
        b_ = Rational(0);
        d_ = Rational(0);
    }
}

QuadNumber QuadNumber::sqrt(const Rational& r) { return QuadNumber(0, 1, r); }

void QuadNumber::join(const QuadNumber& o) {
    if (o.b_.is_zero()) return;
    if (b_.is_zero()) {
        d_ = o.d_;
        return;
    }
    if (!(d_ == o.d_)) throw DomainError("quadratic numbers with different radicands");
}

QuadNumber QuadNumber::conj() const { return QuadNumber(a_, -b_, d_); }

Rational QuadNumber::norm() const { return a_ * a_ - b_ * b_ * d_; }

QuadNumber QuadNumber::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw ZeroDenominator();
    return QuadNumber(a_ / n, -b_ / n, d_);
}

QuadNumber QuadNumber::pow(long e) const {
    QuadNumber base = e < 0 ? inverse() : *this, r(1);
    for (unsigned long k = e < 0 ? -e : e; k; k >>= 1) {
        if (k & 1) r *= base;
        base *= base;
    }
    return r;
}

std::complex<double> QuadNumber::to_complex() const {
    double d = d_.to_double();
    std::complex<double> root = d >= 0 ? std::complex<double>(std::sqrt(d), 0) : std::complex<double>(0, std::sqrt(-d));
    return a_.to_double() + b_.to_double() * root;
}

std::string QuadNumber::str() const {
    if (b_.is_zero()) return a_.str();
    std::ostringstream os;
    if (!a_.is_zero()) os << a_ << (b_.sign() > 0 ? " + " : " - ");
    else if (b_.sign() < 0) os << "-";
    if (!b_.abs().is_one()) os << b_.abs() << "*";
    os << "sqrt(" << d_ << ")";
    return os.str();
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
    join(o);
    a_ += o.a_;
    b_ += o.b_;
    if (b_.is_zero()) d_ = Rational(0);
    return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) { return *this += -o; }

QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
    join(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * d_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    if (b_.is_zero()) d_ = Rational(0);
    return *this;
}

QuadNumber QuadNumber::operator-() const { return QuadNumber(-a_, -b_, d_); }

bool operator==(const QuadNumber& x, const QuadNumber& y) {
    if (x.b_.is_zero() && y.b_.is_zero()) return x.a_ == y.a_;
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
}

const char* location_name(Location at) { return at == Location::Zero ? "zero" : "infinity"; }

const char* regularity_name(Regularity r) { return r == Regularity::RegularLike ? "regular" : "irregular"; }

CharData char_exponents(const QDiffEq& eq, Location at) {
    if (eq.is_zero()) throw DegenerateEquation("all coefficients of the equation vanish");
    CharData cd;
    cd.at = at;
    if (at == Location::Zero) {
        int v = 1 << 30;
        for (Shift s : {Shift::P, Shift::Z, Shift::M})
            if (!eq.coeffs(s).is_zero()) v = std::min(v, eq.coeffs(s).valuation());
        cd.c2 = eq.coeff(Shift::P, v);
        cd.c1 = eq.coeff(Shift::Z, v);
        cd.c0 = eq.coeff(Shift::M, v);
    } else {
        int D = eq.degree();
        cd.c2 = eq.coeff(Shift::M, D);
        cd.c1 = eq.coeff(Shift::Z, D);
        cd.c0 = eq.coeff(Shift::P, D);
    }
    bool a = !cd.c2.is_zero(), b = !cd.c1.is_zero(), c = !cd.c0.is_zero();
    cd.regularity = a && c ? Regularity::RegularLike : Regularity::IrregularLike;
    if (a && c) {
        cd.root_count = 2;
    } else if (!a && b && c) {
        cd.root_count = 1;
        cd.symbolic_roots.push_back(-cd.c0 / cd.c1);
    } else if (a && b && !c) {
        cd.root_count = 1;
        cd.symbolic_roots.push_back(-cd.c1 / cd.c2);
    }
    return cd;
}

std::vector<QuadNumber> char_roots(const CharData& cd, const Bindings& values) {
    std::vector<QuadNumber> out;
    if (cd.root_count == 1) {
        out.push_back(cd.symbolic_roots[0].eval(values));
    } else if (cd.root_count == 2) {
        Rational c2 = cd.c2.eval(values), c1 = cd.c1.eval(values), c0 = cd.c0.eval(values);
        if (c2.is_zero() || c0.is_zero()) throw DomainError("characteristic polynomial degenerates at the given values");
        QuadNumber r = QuadNumber::sqrt(c1 * c1 - Rational(4) * c2 * c0);
        QuadNumber den(Rational(2) * c2);
        out.push_back((QuadNumber(-c1) + r) / den);
        out.push_back((QuadNumber(-c1) - r) / den);
    }
    return out;
}

namespace {

template <class T>
T lift(const Rational& r);
template <>
QuadNumber lift<QuadNumber>(const Rational& r) { return QuadNumber(r); }
template <>
std::complex<double> lift<std::complex<double>>(const Rational& r) { return r.to_double(); }

template <class T>
T lift_root(const QuadNumber& r);
template <>
QuadNumber lift_root<QuadNumber>(const QuadNumber& r) { return r; }
template <>
std::complex<double> lift_root<std::complex<double>>(const QuadNumber& r) { return r.to_complex(); }

bool vanishes(const QuadNumber& x, double) { return x.is_zero(); }
bool vanishes(std::complex<double> x, double scale) { return std::abs(x) <= 1e-13 * scale; }
double magnitude(const QuadNumber&) { return 0; }
double magnitude(std::complex<double> x) { return std::abs(x); }

template <class T>
std::vector<T> bind_coeffs(const UPoly& u, const Bindings& v) {
    std::vector<T> out;
    for (auto& c : u.coeffs()) out.push_back(lift<T>(c.eval(v)));
    return out;
}

template <class T>
T at(const std::vector<T>& v, int k) {
    return k >= 0 && k < static_cast<int>(v.size()) ? v[k] : T(0);
}

template <class T>
SeriesSolution<T> solve(const QDiffEq& eq0, const Bindings& values, int rootIndex, int N, Location loc) {
    if (N < 0) throw DomainError("series order must be nonnegative");
    QDiffEq eq = loc == Location::Zero ? eq0 : invert_variable(eq0);
    auto qit = values.find(q_symbol());
    if (qit == values.end()) throw UnboundParameter("parameter 'q' is not bound");
    if (qit->second.is_zero()) throw DomainError("q must be nonzero");

    // Drop a common power of x so the lowest order is x^0.
    int v = 1 << 30;
    for (Shift s : {Shift::P, Shift::Z, Shift::M})
        if (!eq.coeffs(s).is_zero()) v = std::min(v, eq.coeffs(s).valuation());
    if (v == (1 << 30)) throw DegenerateEquation("all coefficients of the equation vanish");
    eq = QDiffEq(eq.P.shift(-v), eq.Z.shift(-v), eq.M.shift(-v), eq.variable);

    CharData cd = char_exponents(eq, Location::Zero);
    auto roots = char_roots(cd, values);
    if (rootIndex < 0 || rootIndex >= static_cast<int>(roots.size()))
        throw DomainError("no nonzero characteristic root with index " + std::to_string(rootIndex));

    SeriesSolution<T> sol;
    sol.at = loc;
    sol.s = lift_root<T>(roots[rootIndex]);
    sol.q = lift<T>(qit->second);
    sol.P = bind_coeffs<T>(eq.P, values);
    sol.Z = bind_coeffs<T>(eq.Z, values);
    sol.M = bind_coeffs<T>(eq.M, values);

    const T s = sol.s, q = sol.q, sinv = T(1) / s, qinv = T(1) / q;
    std::vector<T> qp(N + 1, T(1)), qm(N + 1, T(1));
    for (int n = 1; n <= N; ++n) {
        qp[n] = qp[n - 1] * q;
        qm[n] = qm[n - 1] * qinv;
    }
    sol.c.assign(1, T(1));
    for (int m = 1; m <= N; ++m) {
        T num(0);
        for (int n = 0; n < m; ++n) {
            int k = m - n;
            num += (at(sol.P, k) * s * qp[n] + at(sol.Z, k) + at(sol.M, k) * sinv * qm[n]) * sol.c[n];
        }
        T a = at(sol.P, 0) * s * qp[m], b = at(sol.Z, 0), c = at(sol.M, 0) * sinv * qm[m];
        T den = a + b + c;
        if (vanishes(den, magnitude(a) + magnitude(b) + magnitude(c)))
            throw Resonance("resonance at order " + std::to_string(m), m);
        sol.c.push_back(-num / den);
    }
    return sol;
}

template <class T>
T horner(const std::vector<T>& c, const T& y) {
    T r(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * y + *it;
    return r;
}

// The three terms of the residual at the local variable y.
template <class T>
std::array<T, 3> terms(const SeriesSolution<T>& sol, const T& y) {
    T fq(0), f(0), fm(0), yn(1), qn(1), qinv = T(1) / sol.q;
    T qm(1);
    for (const T& c : sol.c) {
        fq += c * qn * yn;
        f += c * yn;
        fm += c * qm * yn;
        yn *= y;
        qn *= sol.q;
        qm *= qinv;
    }
    return {horner(sol.P, y) * sol.s * fq, horner(sol.Z, y) * f, horner(sol.M, y) * (T(1) / sol.s) * fm};
}

}  // namespace

ExactSeries series_solution(const QDiffEq& eq, const Bindings& values, int rootIndex, int N, Location at) {
    return solve<QuadNumber>(eq, values, rootIndex, N, at);
}

FloatSeries series_solution_float(const QDiffEq& eq, const Bindings& values, int rootIndex, int N, Location at) {
    return solve<std::complex<double>>(eq, values, rootIndex, N, at);
}

FloatSeries series_solution_float(const QDiffEq& eq, const std::map<Symbol, double>& values, int rootIndex, int N,
                                  Location at) {
    Bindings exact;
    for (auto& [k, v] : values) {
        if (!std::isfinite(v)) throw InputError("non-finite value for '" + k.name() + "'");
        exact[k] = Rational(mpq_class(v));
    }
    return series_solution_float(eq, exact, rootIndex, N, at);
}

QuadNumber evaluate(const ExactSeries& sol, const QuadNumber& y) { return horner(sol.c, y); }

std::complex<double> evaluate(const FloatSeries& sol, std::complex<double> y) { return horner(sol.c, y); }

QuadNumber residual_exact(const ExactSeries& sol, const Rational& x) {
    if (sol.at == Location::Infinity && x.is_zero()) throw DomainError("x = 0 is not in the domain at infinity");
    QuadNumber y = sol.at == Location::Zero ? QuadNumber(x) : QuadNumber(x.inverse());
    auto t = terms(sol, y);
    return t[0] + t[1] + t[2];
}

double residual(const FloatSeries& sol, double x) {
    std::complex<double> y = sol.at == Location::Zero ? x : 1.0 / x;
    auto t = terms(sol, y);
    return std::abs(t[0] + t[1] + t[2]);
}

double relative_residual(const FloatSeries& sol, double x) {
    std::complex<double> y = sol.at == Location::Zero ? x : 1.0 / x;
    auto t = terms(sol, y);
    double scale = std::max({std::abs(t[0]), std::abs(t[1]), std::abs(t[2])});
    return scale == 0 ? 0 : std::abs(t[0] + t[1] + t[2]) / scale;
}

}  // namespace qheun
