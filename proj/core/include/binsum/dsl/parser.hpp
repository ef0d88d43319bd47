#pragma once

#include <string_view>
#include <vector>

#include "binsum/dsl/ast.hpp"
#include "binsum/dsl/lexer.hpp"

namespace binsum::dsl {

// Grammar:
//   file     := identity+
//   identity := "identity" STRING "{" "params" param ("," param)* ";"
//               "lhs" "=" expr ";" "rhs" "=" expr ";" "}"
//   param    := IDENT "in" bound ".." bound          bound := INT | IDENT
//   expr     := term (("+"|"-") term)*
//   term     := unary (("*"|"/") unary)*
//   unary    := "-" unary | power
//   power    := atom ("^" unary)?
//   atom     := INT | IDENT | "x" | "(" expr ")" | call
//   call     := ("binom"|"poch"|"hyp2f1"|"fact"|"sum") "(" expr ("," expr)* ")"
//
// Beyond the grammar the parser enforces: unique parameter names, none of
// them "x" or reused as a summation index; range bounds referencing only
// previously declared parameters; known call names with correct arity; and
// a plain identifier as the sum index.

/// Parses a whole .hvd source. Throws ParseError with position on failure.
std::vector<IdentitySpec> parse_identity_file(std::string_view source);

}  // namespace binsum::dsl
