#pragma once

#include "qheun/mpoly.hpp"

#include <map>
#include <set>
#include <string>

namespace qheun {

// Quotient of two polynomials. Not reduced by a gcd; common monomial factors
// and exact polynomial quotients are removed, and the denominator is scaled
// so its leading term (name order) has coefficient 1. Equality is
// cross-multiplication.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(const Rational& c) : num_(c), den_(1) {}
    RatFun(long c) : RatFun(Rational(c)) {}
    RatFun(int c) : RatFun(Rational(c)) {}
    explicit RatFun(Symbol s) : num_(s), den_(1) {}
    explicit RatFun(const MPoly& p) : num_(p), den_(1) {}
    RatFun(const MPoly& num, const MPoly& den);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // Requires is_constant().
    Rational constant_value() const;

    bool contains(Symbol s) const { return num_.contains(s) || den_.contains(s); }
    std::set<Symbol, SymbolNameLess> variables() const;

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
    RatFun operator-() const;
    RatFun inverse() const;
    RatFun pow(long e) const;

    RatFun substitute(const std::map<Symbol, RatFun>& binding) const;
    Rational eval(const std::map<Symbol, Rational>& values) const;

    std::string str() const;

private:
    MPoly num_, den_;
    void normalize();
    struct Raw {};
    RatFun(MPoly num, MPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
};

bool ratfun_eq(const RatFun& a, const RatFun& b);
inline bool operator==(const RatFun& a, const RatFun& b) { return ratfun_eq(a, b); }

// Limit as var -> 0; throws DivergesAtZero on a pole.
RatFun limit_at_zero(const RatFun& f, Symbol var);

// Order of vanishing in var (negative for a pole); f must be nonzero.
int order_at_zero(const RatFun& f, Symbol var);

}  // namespace qheun
