#pragma once

#include "qheun/ratfun.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qheun {

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' nonneg-integer)?
//   base   := identifier | integer | '(' expr ')' | '-' base
// Identifiers outside `universe` raise UnknownParameter.
RatFun parse_expr(std::string_view text, const std::vector<std::string>& universe);

// Same grammar, every identifier accepted.
RatFun parse_expr(std::string_view text);

}  // namespace qheun
