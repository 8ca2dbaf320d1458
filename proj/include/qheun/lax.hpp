#pragma once

#include "qheun/qdiff.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qheun {

enum class Catalog { Murata, KNY };
enum class MurataFamily { A4, A5, A5s, A6, A6s, A7, A7p };
enum class KNYFamily { D5, A4w, E3a, E3b, E2a, E2b, A1w, A1w8 };
enum class Variant { Paper, Alt };

const char* catalog_name(Catalog c);
std::optional<Catalog> parse_catalog(const std::string& s);
const char* family_id(MurataFamily f);
const char* family_id(KNYFamily f);
std::optional<MurataFamily> parse_murata_family(const std::string& s);
std::optional<KNYFamily> parse_kny_family(const std::string& s);
const std::vector<MurataFamily>& murata_families();
const std::vector<KNYFamily>& kny_families();

// Parameter symbol by ASCII name (k1, th1, l, m, w, n1, ...).
Symbol sym(const char* name);

struct MurataParams {
    MurataFamily family;
    // Values for catalog symbols; unbound symbols stay free. For A4, th2 is
    // eliminated through th1*th2 = -k1*k2*a1*a2*a3 unless bound explicitly.
    std::map<Symbol, RatFun> bindings;
};

// Y(qx) = A(x) Y(x); entries are polynomials in x.
struct LaxMatrix {
    MurataFamily family;
    UPoly A11, A12, A21, A22;
    UPoly det() const;
};

// Throws InvariantViolation if det A or the spectrum of A(0) disagree with
// the catalog data, ConstraintViolation if bound values break the A4
// constraint.
LaxMatrix build_murata(const MurataParams& p);

// y1(q^2 x), y1(qx), y1(x) coefficients stored in the P, Z, M slots,
// cleared by (x - l).
QDiffEq scalar_reduce(const LaxMatrix& m);

bool has_variant(MurataFamily f, Variant v);
// Applies the family's substitution (and the l -> 0 limit where the
// substitution is in m), removes common factors, and strips the gauge
// factor. The default variant gives the f-equation; alt variants give the
// relation after the limit. Bindings are applied to the substituted
// values and the gauge factor.
QDiffEq specialize(MurataFamily f, Variant v, const QDiffEq& relation,
                   const std::map<Symbol, RatFun>& bindings = {});

struct KNYParams {
    KNYFamily family;
    // n6 is eliminated through k1^2 k2^2 = q n1 ... n8 unless bound.
    std::map<Symbol, RatFun> bindings;
};

// Coefficients of T_z, 1, T_z^-1 in L1 at f = n4.
struct KNYOperator {
    KNYFamily family;
    RatFun c_plus, c_zero, c_minus;
};

// Throws SubstitutionSingular if f = n4 makes a denominator vanish.
KNYOperator build_kny(const KNYParams& p);
bool has_gauge_form(KNYFamily f);
QDiffEq kny_to_equation(const KNYOperator& op, bool apply_gauge,
                        const std::map<Symbol, RatFun>& bindings = {});

// Table equations, with d (and g for D5) free.
QDiffEq reference_equation(MurataFamily f);
QDiffEq reference_equation(KNYFamily f);

// The reference value of d in terms of m (murata) or g (kny); empty when d is
// introduced directly by the substitution or absent.
std::optional<RatFun> accessory_formula(MurataFamily f);
std::optional<RatFun> accessory_formula(KNYFamily f);

// Eliminates the constrained parameter (th2 for A4, n6 for the kny catalog).
std::map<Symbol, RatFun> constraint_binding(Catalog c, MurataFamily f = MurataFamily::A4);

enum class AccessorySign { AsPrinted, Flipped, Neither };
const char* accessory_sign_name(AccessorySign s);

struct VerifyReport {
    Catalog catalog;
    std::string family;
    bool match = false;
    AccessorySign accessory = AccessorySign::Neither;
    std::string accessory_map;
    std::vector<std::string> discrepancies;
    QDiffEq derived;
};

// Derives the family's equation and compares it with the table row.
// Bindings (rational values for parameters other than l, m, w, d, g) are
// applied before derivation.
VerifyReport verify_family(Catalog c, const std::string& family,
                           const std::map<Symbol, Rational>& bindings = {});
// All families in catalog order (murata, then D5 and kny); runs in parallel.
std::vector<VerifyReport> verify_all(std::optional<Catalog> only = std::nullopt,
                                     const std::map<Symbol, Rational>& bindings = {});

// Derived equation as `derive` produces it.
QDiffEq derive(Catalog c, const std::string& family, Variant v = Variant::Paper, bool gauge = true,
               const std::map<Symbol, RatFun>& bindings = {});

// Free parameters of a family's catalog data (without l, m, w, d, g).
std::vector<Symbol> family_parameters(Catalog c, const std::string& family);

}  // namespace qheun
