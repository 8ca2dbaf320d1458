#pragma once

#include "qheun/rational.hpp"
#include "qheun/symbol.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qheun {

// Sparse exponent vector: (symbol id, exponent > 0) sorted by id.
class Monomial {
public:
    using Entry = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(Symbol s, std::uint32_t e = 1);

    const std::vector<Entry>& entries() const { return e_; }
    bool is_one() const { return e_.empty(); }
    std::uint32_t degree() const;
    std::uint32_t degree_in(Symbol s) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Requires divides(o).
    Monomial quotient_of(const Monomial& o) const;
    Monomial without(Symbol s) const;
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

private:
    std::vector<Entry> e_;
    friend struct GrlexLess;
};

// Graded lexicographic order on symbol ids; a true monomial order, used for
// storage and division.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Graded lexicographic order over variable names; used for printing and
// canonical scaling.
bool name_grlex_less(const Monomial& a, const Monomial& b);

class RatFun;

class MPoly {
public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    MPoly() = default;
    MPoly(const Rational& c);
    MPoly(long c) : MPoly(Rational(c)) {}
    explicit MPoly(Symbol s);
    MPoly(const Monomial& m, const Rational& c);

    const Terms& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return t_.size() == 1; }
    // Constant term value (zero if absent).
    Rational constant_term() const;
    // Leading term in storage order; requires nonzero.
    const std::pair<const Monomial, Rational>& leading() const { return *t_.rbegin(); }
    // Leading term in name order (canonical); requires nonzero.
    std::pair<Monomial, Rational> canonical_leading() const;

    std::set<Symbol, SymbolNameLess> variables() const;
    bool contains(Symbol s) const;
    std::uint32_t degree_in(Symbol s) const;
    std::uint32_t min_degree_in(Symbol s) const;
    std::uint32_t total_degree() const;
    // Coefficient of s^k as a polynomial in the remaining symbols.
    MPoly coeff_in(Symbol s, std::uint32_t k) const;
    // Greatest monomial dividing every term.
    Monomial monomial_content() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Rational& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    MPoly operator-() const;
    MPoly pow(unsigned e) const;

    // Multiplies by a monomial, or divides by one that divides every term.
    MPoly times(const Monomial& m) const;
    MPoly divided_by(const Monomial& m) const;

    // Single-divisor division; true and the quotient when d divides *this.
    bool exact_div(const MPoly& d, MPoly& quotient) const;

    // Simultaneous substitution; symbols absent from the map stay.
    RatFun substitute(const std::map<Symbol, RatFun>& binding) const;
    // Full evaluation; throws UnboundParameter if a symbol is missing.
    Rational eval(const std::map<Symbol, Rational>& values) const;

    std::string str() const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

private:
    Terms t_;
    void add_term(const Monomial& m, const Rational& c);
};

}  // namespace qheun
