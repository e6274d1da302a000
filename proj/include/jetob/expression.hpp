#pragma once

// Element expression grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ('+' | '-') factor | rational | name | '(' expr ')'
// where rational is `p` or `p/q`. Whitespace is insignificant.

#include <string>
#include <string_view>

#include "jetob/algebra.hpp"

namespace jetob {

/// Throws Error(Parse) or Error(UnknownGenerator) with the column of the
/// offending token.
Element parse_element(const ModelPtr& model, std::string_view text);

/// Canonical rendering, e.g. `A*C + B*T`, `-1/2*A*B`, `0`.
std::string format_element(const Element& e);

std::string format_monomial(const DgaModel& model, Monomial m);

} // namespace jetob
