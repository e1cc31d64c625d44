#pragma once

#include <string>
#include <string_view>

#include "focalkit/mpoly.hpp"

namespace focalkit {

// Parses the polynomial expression language
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' natural)?
//   base     := rational | ident | '(' expr ')'
//   rational := integer ('/' positive-integer)?
//   ident    := letter (letter|digit)*
// over the given variable universe. Unknown identifiers and any syntax
// problem raise ParseError with 1-based line/column.
MPoly parse_polynomial(std::string_view text, const VarList& vars);

}  // namespace focalkit
