#ifndef MZLAB_PARSE_HPP
#define MZLAB_PARSE_HPP

#include <string>
#include <vector>

#include "mzlab/poly.hpp"

namespace mzlab {

// Grammar:
//   expr        := term (('+'|'-') term)*
//   term        := factor ('*' factor)*
//   factor      := coefficient | var ('^' int)? | '(' expr ')'
//   coefficient := int ('/' int)?
// Whitespace is insignificant; there is no implicit multiplication.  Negative
// exponents on the ambient variables require laurent = true.  Over the
// qlaurent ring the symbol t is reserved for the coefficient ring and may
// carry any integer exponent.
Poly parse_poly(const std::string& text, const Ring& ring, const std::vector<std::string>& vars,
                bool laurent);

}  // namespace mzlab

#endif
