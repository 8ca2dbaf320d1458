#pragma once

#include "qheun/qdiff.hpp"

#include <complex>
#include <string>
#include <variant>

namespace qheun {

enum class MoveKind { Pochhammer, Theta };

// The q-shift parameter symbol "q".
Symbol q_symbol();

// P -> q^lambda P, M -> q^-lambda M. Solutions of the result are
// x^-lambda times solutions of eq.
QDiffEq gauge_power(const QDiffEq& eq, long lambda);
// Same with q^lambda represented by the parameter s.
QDiffEq gauge_power(const QDiffEq& eq, Symbol s);

// Pochhammer: M -> M/(1 - alpha x), P -> (1 - q alpha x) P; solutions are
// multiplied by (q alpha x; q)_inf.
// Theta: M -> M/(alpha x), P -> q alpha x P; solutions are multiplied by
// theta_q(q alpha x).
// Throws NotDivisible when M lacks the factor.
QDiffEq gauge_move_factor(const QDiffEq& eq, MoveKind kind, const RatFun& alpha);

// Solutions become g/u for solutions g of eq, where u(qx) = p(x) u(x):
// P -> p(x) P, M -> M/p(x/q), then the equation is multiplied through to
// keep polynomial coefficients.
QDiffEq gauge_linear(const QDiffEq& eq, const UPoly& p);
// u(qx) = num(x)/den(x) u(x).
QDiffEq gauge_rational(const QDiffEq& eq, const UPoly& num, const UPoly& den);

// x -> 1/x: P' = x^D M(1/x), Z' = x^D Z(1/x), M' = x^D P(1/x).
QDiffEq invert_variable(const QDiffEq& eq);

// Reads (P, Z, M) as the relation for y(q^2 x), y(qx), y(x) and returns the
// (qx, x, x/q) form: every coefficient c(x) becomes c(x/q^steps).
QDiffEq rebase(const QDiffEq& relation, int steps = 1);

// (x;q)_inf or theta_q(x) = (q, -x, -q/x; q)_inf, each product truncated to
// `terms` factors. Throws DomainError unless |q| < 1 and terms >= 1.
std::complex<double> eval_special(MoveKind kind, std::complex<double> x, std::complex<double> q,
                                  unsigned terms);

struct PowerGauge {
    RatFun factor;  // q^lambda
};
struct MoveGauge {
    MoveKind kind;
    RatFun alpha;
    bool inverse = false;
};
struct LinearGauge {
    UPoly num, den;
};
struct InvertGauge {};
struct RebaseGauge {
    int steps = 1;
};

using GaugeRecord = std::variant<PowerGauge, MoveGauge, LinearGauge, InvertGauge, RebaseGauge>;

QDiffEq apply_gauge(const QDiffEq& eq, const GaugeRecord& g);
GaugeRecord inverse_gauge(const GaugeRecord& g);
std::string describe(const GaugeRecord& g);

}  // namespace qheun
