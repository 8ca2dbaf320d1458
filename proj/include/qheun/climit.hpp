#pragma once

#include "qheun/local.hpp"
#include "qheun/qdiff.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qheun {

// The limit parameter, q = 1 + eps.
Symbol eps_symbol();

enum class Sigma { Minus = 0, Zero = 1, Plus = 2 };
const char* sigma_name(Sigma s);

// a[sigma][k] multiplies x^k in the coefficient of g(x/q), g(x), g(qx).
// Entries are rational functions of eps alone.
struct EpsilonFamily {
    std::array<std::array<RatFun, 3>, 3> a;

    const RatFun& at(Sigma s, int k) const { return a[static_cast<int>(s)][k]; }
    RatFun& at(Sigma s, int k) { return a[static_cast<int>(s)][k]; }

    // P = a[plus], Z = a[zero], M = a[minus], still in eps.
    QDiffEq equation() const;
    // Substitutes the bindings and q = 1 + eps. Throws InputError when a
    // coefficient has degree above 2 or a symbol other than eps remains.
    static EpsilonFamily from_equation(const QDiffEq& eq, const std::map<Symbol, RatFun>& bindings = {});
};

// b[k] = b_k, b1[k] = b_{k,1}, b0[k] = b_{k,0}.
template <class T>
struct BData {
    std::array<T, 3> b, b1, b0;
};
using LimitData = BData<Rational>;

// Throws LimitDiverges naming the quantity that blows up.
LimitData limit_coefficients(const EpsilonFamily& fam);
// a[minus][k], a[zero][k], a[plus][k] tend to b_k, -2 b_k, b_k.
bool corollary_holds(const EpsilonFamily& fam, const LimitData& b);

// Coefficients by degree.
using QPoly = std::vector<QuadNumber>;
int qpoly_degree(const QPoly& p);  // -1 for the zero polynomial
int qpoly_valuation(const QPoly& p);  // -1 for the zero polynomial
QuadNumber qpoly_eval(const QPoly& p, const QuadNumber& x);
std::complex<double> qpoly_eval(const QPoly& p, std::complex<double> x);
std::string qpoly_str(const QPoly& p, const std::string& var = "x");

enum class OdeClass { HE, CHE, ReducedCHE, BHE, DHE, ReducedDHE, DoublyReducedDHE, THE, Other };
const char* ode_class_name(OdeClass c);

struct Singularity {
    bool infinite = false;
    QuadNumber at;
    // Order of the zero of p[2] (finite points).
    int multiplicity = 0;
    // Poincare rank: 0 at a regular singular point, a half-integer when ramified.
    Rational rank;
    bool regular() const { return rank.is_zero(); }
    bool ramified() const { return !rank.is_integer(); }
    std::string str() const;
};

// p[2] g'' + p[1] g' + p[0] g = 0.
struct HeunODE {
    OdeClass cls = OdeClass::Other;
    std::array<QPoly, 3> p;
    // Limit data the operator was built from.
    std::optional<LimitData> source;
    // g -> x^rho g applied by classify_ode.
    QuadNumber rho;
    QuadNumber accessory;
    std::vector<Singularity> singularities;

    std::string str(const std::string& var = "x") const;
};

HeunODE emit_ode(const LimitData& b);
// Gauges b_{0,0} away, strips the common power of x and names the class.
HeunODE classify_ode(const HeunODE& ode);

// Finite singular points (zeros of p[2]) and infinity, with ranks.
std::vector<Singularity> singularities(const HeunODE& ode);

// Operator acting on h where g = x^rho h.
HeunODE gauge_ode(const HeunODE& ode, const QuadNumber& rho);
// Operator in z where x = a + lambda z.
HeunODE affine_ode(const HeunODE& ode, const QuadNumber& a, const QuadNumber& lambda);
// Divides by the common power of x.
HeunODE strip_ode(const HeunODE& ode);
// Roots of the indicial polynomial at x = 0 when it is regular singular.
std::vector<QuadNumber> exponents_at_zero(const HeunODE& ode);

// Frobenius coefficients of the exponent-0 branch at x = 0, c_0 = 1.
// A free coefficient at a resonance is set to 0.
std::vector<QuadNumber> ode_series(const HeunODE& ode, int N);
// Same recurrence, also allowed when x = 0 is irregular (a formal series).
std::vector<QuadNumber> ode_formal_series(const HeunODE& ode, int N);

// Max over xs of the difference between the power-series parts of the
// q-series at q = 1 + eps (branch nearest q^rho) and the ODE series.
double crosscheck(const EpsilonFamily& fam, const Rational& eps, const std::vector<double>& xs, int N);

struct Preset {
    std::string id;
    std::string description;
    EpsilonFamily family;
    OdeClass expected = OdeClass::Other;
    std::vector<double> xs;
    int terms = 30;
};

std::vector<std::string> preset_ids();
// Throws InputError for an unknown id.
Preset preset(const std::string& id);

}  // namespace qheun
