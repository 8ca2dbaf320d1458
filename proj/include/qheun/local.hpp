#pragma once

#include "qheun/qdiff.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace qheun {

// a + b sqrt(d) with rational a, b, d; d is 0 when b is 0. Numbers with
// different nonzero radicands do not mix.
class QuadNumber {
public:
    QuadNumber() = default;
    QuadNumber(const Rational& a) : a_(a) {}
    QuadNumber(long a) : a_(a) {}
    QuadNumber(const Rational& a, const Rational& b, const Rational& d);

    // Exact square root; rational when r is a perfect square.
    static QuadNumber sqrt(const Rational& r);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& radicand() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadNumber conj() const;
    Rational norm() const;
    QuadNumber inverse() const;
    QuadNumber pow(long e) const;
    std::complex<double> to_complex() const;
    std::string str() const;

    QuadNumber& operator+=(const QuadNumber& o);
    QuadNumber& operator-=(const QuadNumber& o);
    QuadNumber& operator*=(const QuadNumber& o);
    QuadNumber& operator/=(const QuadNumber& o) { return *this *= o.inverse(); }
    friend QuadNumber operator+(QuadNumber x, const QuadNumber& y) { return x += y; }
    friend QuadNumber operator-(QuadNumber x, const QuadNumber& y) { return x -= y; }
    friend QuadNumber operator*(QuadNumber x, const QuadNumber& y) { return x *= y; }
    friend QuadNumber operator/(QuadNumber x, const QuadNumber& y) { return x /= y; }
    QuadNumber operator-() const;
    friend bool operator==(const QuadNumber& x, const QuadNumber& y);

private:
    Rational a_, b_, d_;
    void join(const QuadNumber& o);
};

enum class Location { Zero, Infinity };
enum class Regularity { RegularLike, IrregularLike };
const char* location_name(Location at);
const char* regularity_name(Regularity r);

// c2 s^2 + c1 s + c0 in s = q^rho.
struct CharData {
    Location at = Location::Zero;
    RatFun c2, c1, c0;
    Regularity regularity = Regularity::IrregularLike;
    // Nonzero roots: 2 when c2 and c0 are nonzero, otherwise 0 or 1.
    int root_count = 0;
    // Filled when there is a single nonzero root (a rational function).
    std::vector<RatFun> symbolic_roots;
};

// Zero: lowest order in x of P s^2 + Z s + M. Infinity: M s^2 + Z s + P
// at the top degree.
CharData char_exponents(const QDiffEq& eq, Location at);

// Nonzero roots at the given values. Two roots are ordered
// (-c1 + sqrt(disc)) / (2 c2), (-c1 - sqrt(disc)) / (2 c2).
std::vector<QuadNumber> char_roots(const CharData& cd, const std::map<Symbol, Rational>& values);

using Bindings = std::map<Symbol, Rational>;

// f(x) = x^rho sum c_n x^n at Zero, or x^-rho sum c_n x^-n at Infinity,
// with s = q^rho and c_0 = 1. P, Z, M hold the bound coefficients of the
// equation in the local variable (x at Zero, 1/x at Infinity).
template <class T>
struct SeriesSolution {
    Location at = Location::Zero;
    T s, q;
    std::vector<T> c;
    std::vector<T> P, Z, M;
};
using ExactSeries = SeriesSolution<QuadNumber>;
using FloatSeries = SeriesSolution<std::complex<double>>;

// Throws UnboundParameter if a symbol (q included) is unbound, Resonance if
// s q^m hits the other root, DomainError if there is no root at rootIndex.
ExactSeries series_solution(const QDiffEq& eq, const Bindings& values, int rootIndex, int N,
                            Location at = Location::Zero);
FloatSeries series_solution_float(const QDiffEq& eq, const Bindings& values, int rootIndex, int N,
                                  Location at = Location::Zero);
// Doubles are converted to rationals exactly.
FloatSeries series_solution_float(const QDiffEq& eq, const std::map<Symbol, double>& values, int rootIndex,
                                  int N, Location at = Location::Zero);

// sum_{n<=N} c_n y^n at the local variable y.
QuadNumber evaluate(const ExactSeries& sol, const QuadNumber& y);
std::complex<double> evaluate(const FloatSeries& sol, std::complex<double> y);

// x^-rho (P f(qx) + Z f(x) + M f(x/q)) on the truncated series, x in the
// original variable. Exactly zero for terminating solutions.
QuadNumber residual_exact(const ExactSeries& sol, const Rational& x);
double residual(const FloatSeries& sol, double x);
// residual divided by the largest of the three terms.
double relative_residual(const FloatSeries& sol, double x);

}  // namespace qheun
