#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "binsum/dsl/ast.hpp"
#include "binsum/polynomial.hpp"

namespace binsum::dsl {

using Bindings = std::map<std::string, Integer>;

/// Evaluation failure, positioned at the offending AST node.
class EvalError : public std::runtime_error {
public:
    EvalError(SourcePos pos, const std::string& message);

    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

/// Evaluates an expression to an exact polynomial in x under the given
/// parameter bindings.
///
/// Rules enforced (each violation throws EvalError at the node):
///  - every free identifier must be bound
///  - divisors must evaluate to nonzero constants (the ring has no
///    rational functions)
///  - exponents must be constant integers, non-negative unless the base is
///    a nonzero constant
///  - binom/fact/poch/hyp2f1 arguments must be constant integers within the
///    library domains; hyp2f1 must terminate (first argument <= 0) and its
///    fourth argument must be the variable x
///  - sum bounds must be constant integers with lo <= hi + 1 (the empty
///    sum is 0); the index shadows any outer binding for the body only
Polynomial eval_expr(const Expr& expr, const Bindings& bindings);

}  // namespace binsum::dsl
