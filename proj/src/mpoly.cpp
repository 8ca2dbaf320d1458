#include "qheun/mpoly.hpp"

#include "qheun/errors.hpp"
#include "qheun/ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace qheun {

Monomial::Monomial(Symbol s, std::uint32_t e) {
    if (e > 0)
        e_.emplace_back(s.id(), e);
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (auto& [v, e] : e_)
        d += e;
    return d;
}

std::uint32_t Monomial::degree_in(Symbol s) const {
    for (auto& [v, e] : e_)
        if (v == s.id())
            return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    std::size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
        if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
            r.e_.push_back(e_[i++]);
        else if (i == e_.size() || o.e_[j].first < e_[i].first)
            r.e_.push_back(o.e_[j++]);
        else {
            r.e_.emplace_back(e_[i].first, e_[i].second + o.e_[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    std::size_t j = 0;
    for (auto& [v, e] : e_) {
        while (j < o.e_.size() && o.e_[j].first < v)
            ++j;
        if (j == o.e_.size() || o.e_[j].first != v || o.e_[j].second < e)
            return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0;
    for (auto& [v, e] : o.e_) {
        while (i < e_.size() && e_[i].first < v)
            ++i;
        std::uint32_t mine = (i < e_.size() && e_[i].first == v) ? e_[i].second : 0;
        if (e > mine)
            r.e_.emplace_back(v, e - mine);
    }
    return r;
}

Monomial Monomial::without(Symbol s) const {
    Monomial r;
    for (auto& en : e_)
        if (en.first != s.id())
            r.e_.push_back(en);
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t j = 0;
    for (auto& [v, e] : a.e_) {
        while (j < b.e_.size() && b.e_[j].first < v)
            ++j;
        if (j < b.e_.size() && b.e_[j].first == v)
            r.e_.emplace_back(v, std::min(e, b.e_[j].second));
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.e_.size() || j < b.e_.size()) {
        if (j == b.e_.size() || (i < a.e_.size() && a.e_[i].first < b.e_[j].first))
            r.e_.push_back(a.e_[i++]);
        else if (i == a.e_.size() || b.e_[j].first < a.e_[i].first)
            r.e_.push_back(b.e_[j++]);
        else {
            r.e_.emplace_back(a.e_[i].first, std::max(a.e_[i].second, b.e_[j].second));
            ++i;
            ++j;
        }
    }
    return r;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    std::size_t n = std::min(a.e_.size(), b.e_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.e_[i].first != b.e_[i].first)
            return a.e_[i].first > b.e_[i].first;
        if (a.e_[i].second != b.e_[i].second)
            return a.e_[i].second < b.e_[i].second;
    }
    return a.e_.size() < b.e_.size();
}

namespace {

using NamedExp = std::vector<std::pair<const std::string*, std::uint32_t>>;

NamedExp named(const Monomial& m) {
    NamedExp r;
    for (auto& [v, e] : m.entries())
        r.emplace_back(&Symbol::name_of(v), e);
    std::sort(r.begin(), r.end(), [](auto& x, auto& y) { return *x.first < *y.first; });
    return r;
}

bool named_less(const NamedExp& a, std::uint32_t da, const NamedExp& b, std::uint32_t db) {
    if (da != db)
        return da < db;
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (*a[i].first != *b[i].first)
            return *a[i].first > *b[i].first;
        if (a[i].second != b[i].second)
            return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

}  // namespace

bool name_grlex_less(const Monomial& a, const Monomial& b) {
    return named_less(named(a), a.degree(), named(b), b.degree());
}

MPoly::MPoly(const Rational& c) {
    if (!c.is_zero())
        t_.emplace(Monomial(), c);
}

MPoly::MPoly(Symbol s) { t_.emplace(Monomial(s), Rational(1)); }

MPoly::MPoly(const Monomial& m, const Rational& c) {
    if (!c.is_zero())
        t_.emplace(m, c);
}

bool MPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

Rational MPoly::constant_term() const {
    auto it = t_.find(Monomial());
    return it == t_.end() ? Rational(0) : it->second;
}

std::pair<Monomial, Rational> MPoly::canonical_leading() const {
    auto best = t_.begin();
    NamedExp bk = named(best->first);
    std::uint32_t bd = best->first.degree();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it) {
        NamedExp k = named(it->first);
        std::uint32_t d = it->first.degree();
        if (named_less(bk, bd, k, d)) {
            best = it;
            bk = std::move(k);
            bd = d;
        }
    }
    return {best->first, best->second};
}

std::set<Symbol, SymbolNameLess> MPoly::variables() const {
    std::set<std::uint32_t> ids;
    for (auto& [m, c] : t_)
        for (auto& [v, e] : m.entries())
            ids.insert(v);
    std::set<Symbol, SymbolNameLess> r;
    for (auto v : ids)
        r.insert(Symbol::from_id(v));
    return r;
}

bool MPoly::contains(Symbol s) const {
    for (auto& [m, c] : t_)
        if (m.degree_in(s) > 0)
            return true;
    return false;
}

std::uint32_t MPoly::degree_in(Symbol s) const {
    std::uint32_t d = 0;
    for (auto& [m, c] : t_)
        d = std::max(d, m.degree_in(s));
    return d;
}

std::uint32_t MPoly::min_degree_in(Symbol s) const {
    if (t_.empty())
        return 0;
    std::uint32_t d = UINT32_MAX;
    for (auto& [m, c] : t_)
        d = std::min(d, m.degree_in(s));
    return d;
}

std::uint32_t MPoly::total_degree() const {
    std::uint32_t d = 0;
    for (auto& [m, c] : t_)
        d = std::max(d, m.degree());
    return d;
}

MPoly MPoly::coeff_in(Symbol s, std::uint32_t k) const {
    MPoly r;
    for (auto& [m, c] : t_)
        if (m.degree_in(s) == k)
            r.t_.emplace(m.without(s), c);
    return r;
}

Monomial MPoly::monomial_content() const {
    if (t_.empty())
        return Monomial();
    Monomial g = t_.begin()->first;
    for (auto& [m, c] : t_) {
        g = Monomial::gcd(g, m);
        if (g.is_one())
            break;
    }
    return g;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            t_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (auto& [m, c] : o.t_)
        add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (auto& [m, c] : o.t_)
        add_term(m, -c);
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, v] : t_)
        v *= c;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    if (a.is_zero() || b.is_zero())
        return r;
    if (b.is_constant())
        return a * b.constant_term();
    if (a.is_constant())
        return b * a.constant_term();
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_)
        c = -c;
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r(1), base = *this;
    while (e) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

MPoly MPoly::times(const Monomial& m) const {
    if (m.is_one())
        return *this;
    MPoly r;
    for (auto& [mm, c] : t_)
        r.t_.emplace_hint(r.t_.end(), mm * m, c);
    return r;
}

MPoly MPoly::divided_by(const Monomial& m) const {
    if (m.is_one())
        return *this;
    MPoly r;
    for (auto& [mm, c] : t_) {
        if (!m.divides(mm))
            throw NotDivisible("monomial does not divide polynomial");
        r.t_.emplace_hint(r.t_.end(), m.quotient_of(mm), c);
    }
    return r;
}

bool MPoly::exact_div(const MPoly& d, MPoly& quotient) const {
    if (d.is_zero())
        throw ZeroDenominator();
    quotient = MPoly();
    if (is_zero())
        return true;
    if (d.is_constant()) {
        quotient = *this * d.constant_term().inverse();
        return true;
    }
    const auto& [ld, lc] = d.leading();
    for (auto& [v, e] : ld.entries())
        if (degree_in(Symbol::from_id(v)) < e)
            return false;
    MPoly r = *this;
    Rational inv = lc.inverse();
    while (!r.is_zero()) {
        const auto& [lm, c] = r.leading();
        if (!ld.divides(lm))
            return false;
        Monomial tm = ld.quotient_of(lm);
        Rational tc = c * inv;
        quotient.add_term(tm, tc);
        for (auto& [m, v] : d.t_)
            r.add_term(m * tm, -(v * tc));
    }
    return true;
}

RatFun MPoly::substitute(const std::map<Symbol, RatFun>& binding) const {
    // Homogenize: each bound symbol v of degree D_v contributes d_v^{D_v}
    // to the common denominator.
    struct Bound {
        std::uint32_t deg;
        std::vector<MPoly> npow, dpow;
    };
    std::map<std::uint32_t, Bound> used;
    for (auto& [s, val] : binding) {
        std::uint32_t D = degree_in(s);
        if (D == 0)
            continue;
        Bound b;
        b.deg = D;
        b.npow.push_back(MPoly(1));
        b.dpow.push_back(MPoly(1));
        for (std::uint32_t k = 1; k <= D; ++k) {
            b.npow.push_back(b.npow.back() * val.num());
            b.dpow.push_back(b.dpow.back() * val.den());
        }
        used.emplace(s.id(), std::move(b));
    }
    if (used.empty())
        return RatFun(*this);
    MPoly num, den(1);
    for (auto& [v, b] : used)
        den *= b.dpow[b.deg];
    for (auto& [m, c] : t_) {
        Monomial rest;
        MPoly term(Monomial(), c);
        std::map<std::uint32_t, std::uint32_t> seen;
        for (auto& [v, e] : m.entries()) {
            auto it = used.find(v);
            if (it == used.end())
                rest = rest * Monomial(Symbol::from_id(v), e);
            else
                seen[v] = e;
        }
        for (auto& [v, b] : used) {
            std::uint32_t e = seen.count(v) ? seen[v] : 0;
            term = term * b.npow[e];
            term = term * b.dpow[b.deg - e];
        }
        num += term.times(rest);
    }
    return RatFun(num, den);
}

Rational MPoly::eval(const std::map<Symbol, Rational>& values) const {
    Rational r;
    for (auto& [m, c] : t_) {
        Rational t = c;
        for (auto& [v, e] : m.entries()) {
            auto it = values.find(Symbol::from_id(v));
            if (it == values.end())
                throw UnboundParameter("parameter '" + Symbol::name_of(v) + "' is not bound");
            t *= it->second.pow(e);
        }
        r += t;
    }
    return r;
}

std::string MPoly::str() const {
    if (t_.empty())
        return "0";
    std::vector<std::pair<NamedExp, const std::pair<const Monomial, Rational>*>> items;
    for (auto& kv : t_)
        items.emplace_back(named(kv.first), &kv);
    std::sort(items.begin(), items.end(), [](auto& x, auto& y) {
        return named_less(y.first, y.second->first.degree(), x.first, x.second->first.degree());
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [key, kv] : items) {
        const Rational& c = kv->second;
        std::string mono;
        bool first_power = false;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i)
                mono += "*";
            mono += *key[i].first;
            if (key[i].second > 1) {
                mono += "^" + std::to_string(key[i].second);
                if (i == 0)
                    first_power = true;
            }
        }
        Rational mag = c.abs();
        std::string body;
        if (mono.empty())
            body = mag.str();
        else if (mag.is_one())
            body = mono;
        else
            body = mag.str() + "*" + mono;
        if (first) {
            if (c.sign() < 0) {
                // "-x^2" would parse as (-x)^2.
                if (mag.is_one() && first_power)
                    os << "-1*" << mono;
                else
                    os << "-" << body;
            } else
                os << body;
            first = false;
        } else
            os << (c.sign() < 0 ? " - " : " + ") << body;
    }
    return os.str();
}

}  // namespace qheun
