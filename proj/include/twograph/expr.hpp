#pragma once

#include <string>
#include <string_view>

#include "twograph/element.hpp"

namespace twograph {

// Element expression grammar shared with the CLI.
//
//   element := [sign] term ((`+`|`-`) term)*
//   term    := coeff [`*` gen] | gen
//   gen     := `S` `(` letter* `;` letter* `)`
//   letter  := (`e`|`f`) digits
//   coeff   := rational [`i`] | `i`
//   rational:= digits [`/` digits] | decimal constant (float mode)
//
// `S(u ; v)` is the standard generator s_u s_v*; either side may be empty.
// Example: `1/2 * S(e1 f2 ; f1) + S(; e2)`.
Element parse_element(std::string_view text, const ThetaPtr& theta);

// Canonical rendering; re-parses to an equal element.  Terms appear in
// map order; a complex coefficient is split into its real and imaginary
// summands.
std::string to_expr(const Element& x);

std::string to_expr(const GenPair& g);

}  // namespace twograph
