#include "qheun/ratfun.hpp"

#include "qheun/errors.hpp"

namespace qheun {

RatFun::RatFun(const MPoly& num, const MPoly& den) : num_(num), den_(den) { normalize(); }

void RatFun::normalize() {
    if (den_.is_zero())
        throw ZeroDenominator();
    if (num_.is_zero()) {
        den_ = MPoly(1);
        return;
    }
    Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
    if (!g.is_one()) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    if (den_.is_constant()) {
        Rational c = den_.constant_term();
        if (!c.is_one()) {
            num_ *= c.inverse();
            den_ = MPoly(1);
        }
        return;
    }
    if (!den_.is_monomial()) {
        MPoly q;
        if (num_.size() >= den_.size() && num_.exact_div(den_, q)) {
            num_ = std::move(q);
            den_ = MPoly(1);
            return;
        }
        if (!num_.is_monomial() && den_.size() >= num_.size() && den_.exact_div(num_, q)) {
            num_ = MPoly(1);
            den_ = std::move(q);
            if (den_.is_constant()) {
                num_ = MPoly(den_.constant_term().inverse());
                den_ = MPoly(1);
                return;
            }
        }
    }
    Rational lc = den_.is_monomial() ? den_.leading().second : den_.canonical_leading().second;
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFun::constant_value() const {
    if (!is_constant())
        throw DomainError("expression is not constant: " + str());
    return num_.constant_term() / den_.constant_term();
}

std::set<Symbol, SymbolNameLess> RatFun::variables() const {
    auto v = num_.variables();
    for (auto s : den_.variables())
        v.insert(s);
    return v;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_)
        return RatFun(a.num_ + b.num_, a.den_);
    if (a.den_.is_monomial() && b.den_.is_monomial()) {
        const auto& [ma, ca] = a.den_.leading();
        const auto& [mb, cb] = b.den_.leading();
        Monomial l = Monomial::lcm(ma, mb);
        MPoly n = a.num_.times(ma.quotient_of(l)) * cb + b.num_.times(mb.quotient_of(l)) * ca;
        return RatFun(n, MPoly(l, ca * cb));
    }
    MPoly k;
    if (b.den_.size() >= a.den_.size() && b.den_.exact_div(a.den_, k))
        return RatFun(a.num_ * k + b.num_, b.den_);
    if (a.den_.size() >= b.den_.size() && a.den_.exact_div(b.den_, k))
        return RatFun(a.num_ + b.num_ * k, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero())
        return RatFun();
    MPoly n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
    MPoly q;
    if (!d2.is_monomial() && n1.size() >= d2.size() && n1.exact_div(d2, q)) {
        n1 = std::move(q);
        d2 = MPoly(1);
    }
    if (!d1.is_monomial() && n2.size() >= d1.size() && n2.exact_div(d1, q)) {
        n2 = std::move(q);
        d1 = MPoly(1);
    }
    return RatFun(n1 * n2, d1 * d2);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Raw{}); }

RatFun RatFun::inverse() const {
    if (is_zero())
        throw ZeroDenominator();
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    return RatFun(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFun RatFun::substitute(const std::map<Symbol, RatFun>& binding) const {
    RatFun n = num_.substitute(binding);
    RatFun d = den_.substitute(binding);
    if (d.is_zero())
        throw ZeroDenominator();
    return n / d;
}

Rational RatFun::eval(const std::map<Symbol, Rational>& values) const {
    Rational d = den_.eval(values);
    if (d.is_zero())
        throw ZeroDenominator();
    return num_.eval(values) / d;
}

static bool bare_token(const MPoly& p) {
    if (p.is_constant())
        return p.constant_term().is_integer() && p.constant_term().sign() > 0;
    if (!p.is_monomial())
        return false;
    const auto& [m, c] = p.leading();
    return c.is_one() && m.entries().size() == 1 && m.entries()[0].second == 1;
}

std::string RatFun::str() const {
    if (den_.is_constant() && den_.constant_term().is_one())
        return num_.str();
    std::string n = num_.str();
    if (num_.size() > 1)
        n = "(" + n + ")";
    std::string d = den_.str();
    if (!bare_token(den_))
        d = "(" + d + ")";
    return n + "/" + d;
}

bool ratfun_eq(const RatFun& a, const RatFun& b) {
    if (a.den() == b.den())
        return a.num() == b.num();
    return a.num() * b.den() == b.num() * a.den();
}

int order_at_zero(const RatFun& f, Symbol var) {
    if (f.is_zero())
        throw DomainError("order of the zero function");
    return static_cast<int>(f.num().min_degree_in(var)) - static_cast<int>(f.den().min_degree_in(var));
}

RatFun limit_at_zero(const RatFun& f, Symbol var) {
    if (f.is_zero())
        return f;
    std::uint32_t on = f.num().min_degree_in(var), od = f.den().min_degree_in(var);
    if (on < od)
        throw DivergesAtZero("pole of order " + std::to_string(od - on) + " at " + var.name() + "=0");
    if (on > od)
        return RatFun();
    return RatFun(f.num().coeff_in(var, on), f.den().coeff_in(var, od));
}

}  // namespace qheun
