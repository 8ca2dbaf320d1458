#pragma once

#include "qheun/climit.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qheun {

// Named parameters of one of the Heun-class equations:
//   HE  alpha beta gamma delta epsilon t B   (gamma + delta + epsilon = alpha + beta + 1)
//   CHE alpha beta gamma delta B
//   BHE alpha gamma delta B
//   DHE alpha gamma delta B
//   THE alpha gamma B
// epsilon is the HE exponent parameter, unrelated to the limit parameter eps.
struct HeunParams {
    OdeClass cls = OdeClass::Other;
    std::vector<std::pair<std::string, QuadNumber>> values;

    // Throws InputError for a name the class does not have.
    const QuadNumber& get(const std::string& name) const;
    void set(const std::string& name, const QuadNumber& v);
    std::string str() const;
    friend bool operator==(const HeunParams& a, const HeunParams& b);
};

// Parameter names of a class in canonical order; empty for non-Heun classes.
std::vector<std::string> param_names(OdeClass c);

// Polynomial form of the display, multiplied through by its denominators.
// Throws ConstraintViolation when the HE constraint fails or t is 0 or 1,
// InputError when a parameter is missing.
HeunODE to_operator(const HeunParams& p);

struct MatchResult {
    std::optional<HeunParams> params;
    // Why nothing matched; empty on success.
    std::string obstruction;
    // x = a + lambda z, then y = z^rho u.
    QuadNumber a, lambda = QuadNumber(1), rho;
};

// Tries affine changes of x, scaling and a z^rho gauge. Keeping the origin
// (a = 0) counts most, then lambda = 1 and rho = 0; ties go to the
// lexicographically smaller parameter list. In HE, alpha is the root with
// the larger real part.
MatchResult match_class(const HeunODE& ode);

}  // namespace qheun
