#pragma once

#include "qheun/upoly.hpp"

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qheun {

enum class Shift { M = 0, Z = 1, P = 2 };

const char* shift_name(Shift s);

// P(x) f(qx) + Z(x) f(x) + M(x) f(x/q) = 0
struct QDiffEq {
    UPoly P, Z, M;
    std::string variable = "x";

    static constexpr const char* convention = "P*f(q*x) + Z*f(x) + M*f(x/q) = 0";

    QDiffEq() = default;
    QDiffEq(UPoly p, UPoly z, UPoly m, std::string var = "x");

    const UPoly& coeffs(Shift s) const;
    UPoly& coeffs(Shift s);
    RatFun coeff(Shift s, int k) const { return coeffs(s).coeff(k); }
    int degree() const;
    bool is_zero() const { return P.is_zero() && Z.is_zero() && M.is_zero(); }
    // Throws DegenerateEquation when all coefficients vanish.
    void validate() const;

    QDiffEq scaled(const RatFun& c) const;
    QDiffEq substitute(const std::map<Symbol, RatFun>& binding) const;
    // Divides P, Z, M by their common polynomial factor and makes the
    // leading P (or Z, or M) coefficient 1.
    QDiffEq normalized() const;
    bool contains(Symbol s) const;
    std::set<Symbol, SymbolNameLess> parameters() const;

    std::string str() const;
};

// Same equation up to one overall nonzero factor, rational in x and the
// parameters.
bool proportional(const QDiffEq& a, const QDiffEq& b);

struct NewtonDiagram {
    // (column, row) with column M=0, Z=1, P=2 and row = degree.
    std::set<std::pair<int, int>> filled;
    // Vertices of the convex hull, counterclockwise from the lowest-leftmost point.
    std::vector<std::pair<int, int>> hull;
    int rows = 3;
};

NewtonDiagram newton_diagram(const QDiffEq& eq);
std::vector<std::pair<int, int>> convex_hull(std::vector<std::pair<int, int>> pts);

enum class TaxClass { QHeun, Confluent, Biconfluent, DoublyConfluent, HypergeometricType, Unclassified };
enum class Reduction { NonReduced, SinglyReduced, DoublyReduced, NotApplicable };

const char* tax_class_name(TaxClass c);
const char* reduction_name(Reduction r);

struct TaxonomyLabel {
    TaxClass cls = TaxClass::Unclassified;
    std::string variant;  // empty when none
    Reduction reduction = Reduction::NotApplicable;
    // Bit (3*row + column) set when that coefficient is nonzero.
    std::uint16_t signature = 0;

    std::string signature_string() const;
    friend bool operator==(const TaxonomyLabel&, const TaxonomyLabel&) = default;
};

std::uint16_t support_signature(const QDiffEq& eq);
TaxonomyLabel classify(const QDiffEq& eq);

// Variant form under x -> 1/x.
std::string mirror_variant(const std::string& variant);

enum class DiagramFormat { Ascii, Svg };
std::string render_diagram(const NewtonDiagram& d, DiagramFormat fmt);

}  // namespace qheun
