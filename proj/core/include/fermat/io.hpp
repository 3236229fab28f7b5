#pragma once

#include "fermat/quadfield.hpp"

#include <string>
#include <string_view>

namespace fermat {

/// Parses a field element from the grammar
///   elem := term (('+'|'-') term)?
///   term := rat ('*' sqrt)? | ('-')? sqrt
///   sqrt := 'sqrt' '(' INT ')'
///   rat  := ('(')? ('-')? INT ('/' INT)? (')')?
/// Whitespace-insensitive. The sqrt argument must equal the field's d.
/// Throws ParseError.
FieldElem parse_field_elem(std::string_view text, const QuadField& field);

/// Canonical rendering accepted back by parse_field_elem: a bare rational
/// "num/den" when y = 0, otherwise "(x)+(y)*sqrt(d)".
std::string format_field_elem(const FieldElem& e);

} // namespace fermat
