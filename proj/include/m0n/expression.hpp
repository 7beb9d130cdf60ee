#ifndef M0N_EXPRESSION_HPP_
#define M0N_EXPRESSION_HPP_

#include <string>
#include <string_view>

#include "m0n/monomial.hpp"

namespace m0n {

// Parses
//   input   := "n=" INT ";" product
//   product := "1" | factor ("*" factor)*
//   factor  := "d(" part "|" part ")" ("^" INT)?
//   part    := INT ("," INT)*
// Whitespace may appear between any two tokens. Repeated factors accumulate.
// Errors carry the byte offset of the offending token.
Monomial parse_monomial(std::string_view text);

// Canonical text: factors in cut order, "^1" omitted, "1" for no factors.
std::string render_monomial(const Monomial& m);

}  // namespace m0n

#endif  // M0N_EXPRESSION_HPP_
