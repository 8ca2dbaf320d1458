#include "qheun/upoly.hpp"

#include "qheun/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qheun {

UPoly::UPoly(const RatFun& c) {
    if (!c.is_zero())
        c_.push_back(c);
}

UPoly::UPoly(std::vector<RatFun> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const RatFun& c, int k) {
    UPoly p;
    if (c.is_zero())
        return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, RatFun());
    p.c_[k] = c;
    return p;
}

UPoly UPoly::linear(const RatFun& c1, const RatFun& c0) { return UPoly(std::vector<RatFun>{c0, c1}); }

UPoly UPoly::from_ratfun(const RatFun& f, Symbol var) {
    if (f.den().contains(var))
        throw DomainError("not a polynomial in " + var.name() + ": " + f.str());
    std::uint32_t D = f.num().degree_in(var);
    std::vector<RatFun> c;
    for (std::uint32_t k = 0; k <= D; ++k)
        c.push_back(RatFun(f.num().coeff_in(var, k), f.den()));
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::fraction(const RatFun& f, Symbol var) {
    return {from_ratfun(RatFun(f.num()), var), from_ratfun(RatFun(f.den()), var)};
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

RatFun UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return RatFun();
    return c_[k];
}

int UPoly::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero())
            return static_cast<int>(k);
    throw DomainError("valuation of zero polynomial");
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] = c_[k] + o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero())
        return UPoly();
    std::vector<RatFun> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero())
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const RatFun& s) {
    if (s.is_zero())
        return UPoly();
    std::vector<RatFun> c;
    for (auto& v : a.c_)
        c.push_back(v * s);
    return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_)
        v = -v;
    return r;
}

UPoly UPoly::pow(unsigned e) const {
    UPoly r(1), b = *this;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

UPoly UPoly::dilate(const RatFun& c) const {
    std::vector<RatFun> r;
    RatFun p(1);
    for (auto& v : c_) {
        r.push_back(v * p);
        p = p * c;
    }
    return UPoly(std::move(r));
}

UPoly UPoly::shift(int k) const {
    if (is_zero() || k == 0)
        return *this;
    if (k < 0) {
        if (valuation() < -k)
            throw NotDivisible("polynomial not divisible by x^" + std::to_string(-k));
        return UPoly(std::vector<RatFun>(c_.begin() + (-k), c_.end()));
    }
    std::vector<RatFun> r(static_cast<std::size_t>(k), RatFun());
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(std::move(r));
}

UPoly UPoly::reverse(int D) const {
    if (degree() > D)
        throw DomainError("reverse: degree exceeds bound");
    std::vector<RatFun> r(static_cast<std::size_t>(D) + 1, RatFun());
    for (std::size_t k = 0; k < c_.size(); ++k)
        r[D - k] = c_[k];
    return UPoly(std::move(r));
}

RatFun UPoly::eval(const RatFun& at) const {
    RatFun r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * at + *it;
    return r;
}

UPoly UPoly::substitute(const std::map<Symbol, RatFun>& binding) const {
    std::vector<RatFun> r;
    for (auto& v : c_)
        r.push_back(v.substitute(binding));
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero())
        return *this;
    return *this * lc().inverse();
}

bool UPoly::contains(Symbol s) const {
    for (auto& v : c_)
        if (v.contains(s))
            return true;
    return false;
}

void UPoly::divmod(const UPoly& d, UPoly& q, UPoly& r) const {
    if (d.is_zero())
        throw ZeroDenominator();
    q = UPoly();
    r = *this;
    RatFun inv = d.lc().inverse();
    std::vector<RatFun> qc(std::max(0, degree() - d.degree() + 1));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        RatFun t = r.lc() * inv;
        qc[k] = t;
        r -= (d * t).shift(k);
    }
    q = UPoly(std::move(qc));
}

bool UPoly::exact_div(const UPoly& d, UPoly& q) const {
    UPoly r;
    divmod(d, q, r);
    return r.is_zero();
}

UPoly UPoly::operator/(const UPoly& d) const {
    UPoly q;
    if (!exact_div(d, q))
        throw NotDivisible("polynomial division leaves a remainder");
    return q;
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a.monic(), y = b.monic();
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        UPoly q, r;
        x.divmod(y, q, r);
        x = std::move(y);
        y = r.monic();
    }
    return x;
}

RatFun UPoly::to_ratfun(Symbol var) const {
    RatFun r;
    RatFun v(var);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * v + *it;
    return r;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    return to_ratfun(Symbol(var)).str();
}

bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size())
        return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
        if (!ratfun_eq(a.c_[k], b.c_[k]))
            return false;
    return true;
}

}  // namespace qheun
