#pragma once

#include <string>
#include <string_view>

#include "dicot/forms.hpp"

namespace dicot {

/// Largest n accepted in the `*n` shorthand.
inline constexpr unsigned kMaxNimberShorthand = 31;

/// Parses game notation and interns the denoted form.
///
///   expr := term ('+' term)*
///   term := '-'? game
///   game := '0' | '*' nat? | '{' list '|' list '}'
///   list := (expr (',' expr)*)?
///
/// Whitespace is ignored. `*` is *1, `*0` is rejected, `-` is the conjugate
/// and `+` the disjunctive sum. Throws SyntaxError or DicotViolation.
FormId parse(Store& store, std::string_view text);

/// Inverse of parse for single forms. Nimbers print as `0`, `*`, `*n`;
/// options are listed in stored order.
std::string print(const Store& store, FormId g);

}  // namespace dicot
