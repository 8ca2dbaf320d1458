#pragma once

#include "qheun/climit.hpp"
#include "qheun/lax.hpp"
#include "qheun/odeheun.hpp"
#include "qheun/qdiff.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace qheun {

using json = nlohmann::ordered_json;

// qheun-eq/1
json equation_to_json(const QDiffEq& eq);
// Throws InputError (or SyntaxError / UnknownParameter) on a malformed document.
QDiffEq equation_from_json(const json& doc);
std::vector<std::string> declared_parameters(const json& doc);

// qheun-params/1
json bindings_to_json(const Bindings& b);
Bindings bindings_from_json(const json& doc);
// Rejects identifiers outside `allowed` with UnknownParameter.
void check_bindings(const Bindings& b, const std::vector<std::string>& allowed);
std::map<Symbol, RatFun> as_ratfun(const Bindings& b);

// qheun-family/1: {"minus"|"zero"|"plus": {"0".."2": expr in eps}}.
json family_to_json(const EpsilonFamily& f);
EpsilonFamily family_from_json(const json& doc);

// qheun-ode/1, write only.
json ode_to_json(const HeunODE& ode, const MatchResult* match = nullptr);
json limit_to_json(const LimitData& b);
json taxonomy_to_json(const TaxonomyLabel& t);
json params_to_json(const HeunParams& p);

// {"family", "catalog", "match", "accessorySign", "discrepancies"}
json report_to_json(const VerifyReport& r);

json read_json_file(const std::string& path);  // "-" reads standard input

}  // namespace qheun
