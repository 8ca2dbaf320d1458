#pragma once

#include "qheun/ratfun.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qheun {

// Polynomial in one variable with RatFun coefficients, index = degree.
class UPoly {
public:
    UPoly() = default;
    UPoly(const RatFun& c);
    UPoly(long c) : UPoly(RatFun(c)) {}
    explicit UPoly(std::vector<RatFun> coeffs);
    static UPoly monomial(const RatFun& c, int k);
    static UPoly x() { return monomial(RatFun(1), 1); }
    // c1*x + c0
    static UPoly linear(const RatFun& c1, const RatFun& c0);

    // Reads f as a polynomial in var; its denominator must be free of var.
    static UPoly from_ratfun(const RatFun& f, Symbol var);
    // Numerator and denominator of f as polynomials in var.
    static std::pair<UPoly, UPoly> fraction(const RatFun& f, Symbol var);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<RatFun>& coeffs() const { return c_; }
    RatFun coeff(int k) const;
    const RatFun& lc() const { return c_.back(); }
    // Lowest k with a nonzero coefficient; requires nonzero.
    int valuation() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const RatFun& c);
    friend UPoly operator*(const RatFun& c, const UPoly& a) { return a * c; }
    UPoly operator-() const;
    UPoly pow(unsigned e) const;

    // p(c*x)
    UPoly dilate(const RatFun& c) const;
    // x^k * p
    UPoly shift(int k) const;
    // x^D * p(1/x); requires D >= degree().
    UPoly reverse(int D) const;
    RatFun eval(const RatFun& at) const;
    UPoly substitute(const std::map<Symbol, RatFun>& binding) const;
    UPoly monic() const;
    bool contains(Symbol s) const;

    void divmod(const UPoly& d, UPoly& q, UPoly& r) const;
    bool exact_div(const UPoly& d, UPoly& q) const;
    // Throws NotDivisible.
    UPoly operator/(const UPoly& d) const;
    // Monic gcd over the coefficient field (zero if both are zero).
    static UPoly gcd(const UPoly& a, const UPoly& b);

    RatFun to_ratfun(Symbol var) const;
    std::string str(const std::string& var = "x") const;

    friend bool operator==(const UPoly& a, const UPoly& b);

private:
    std::vector<RatFun> c_;
    void trim();
};

}  // namespace qheun
