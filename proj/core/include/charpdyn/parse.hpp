#pragma once

#include <string>

#include "charpdyn/places.hpp"
#include "charpdyn/rat_func.hpp"

namespace charpdyn {

// "p^k" (or bare "p" for k = 1), e.g. "3^2". Throws ParseError.
FieldPtr parse_field_spec(const std::string& s);

// Expression grammar over the session field:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-'|'+')* base ('^' integer)?
//   base   := integer | 't' | 'g' | '(' expr ')'
// 'g' is the constant-field generator and needs k >= 2. Integers reduce
// mod p. Printing (RatFunc::to_string) round-trips through this parser.
RatFunc parse_element(const std::string& s, const FieldPtr& field);

// "inf" or a polynomial that is irreducible after scaling monic.
Place parse_place(const std::string& s, const FieldPtr& field);

}  // namespace charpdyn
