#pragma once

#include <string>

#include "qgalois/algebra.hpp"
#include "qgalois/element.hpp"

namespace qgalois {

// Parses one expression line and evaluates it to normal form in `spec`.
// Grammar (whitespace-insensitive, left-associative, '*' optional):
//   expr      := ['+'|'-'] product (('+'|'-') product)*
//   product   := power (['*'] power)*
//   power     := atom ['^' ['+'|'-'] digits]
//   atom      := number | 'q' | lambda | generator | '(' expr ')'
//   number    := digits ['/' digits]
//   lambda    := 'l' digit digit | 'l{' digits ',' digits '}'
//   generator := ('E'|'F'|'K'|'X'|'Y'|'Z') digit
// E and X name upper letters, F and Y lower letters, K and Z torus letters.
// Negative powers apply to scalars, torus generators, and parenthesized
// values that are a single torus term; anything else raises ParseError.
// Unknown generator letters raise UnknownGeneratorError, indices beyond the
// rank raise IndexOutOfRankError.
Element parse_expression(const std::string& text, const AlgebraSpec& spec);

// Canonical text form: one term per basis word in word order, coefficients
// as reduced fractions, letters named by the algebra kind (F/E/K for U and
// grU, Y/X/Z otherwise). The zero element prints as "0"; parse_expression
// applied to the output reproduces the element exactly.
std::string print_canonical(const Element& e, AlgebraKind kind);

}  // namespace qgalois
