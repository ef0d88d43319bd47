#pragma once

#include <string>
#include <utility>
#include <vector>

#include "binsum/dsl/ast.hpp"
#include "binsum/dsl/eval.hpp"
#include "binsum/polynomial.hpp"

namespace binsum::dsl {

/// Comparison of lhs vs rhs at one point of the parameter box.
struct BindingReport {
    std::vector<std::pair<std::string, Integer>> bindings;  // declaration order
    Polynomial lhs;
    Polynomial rhs;
    Polynomial difference;
    bool equal;
};

/// Enumerates the parameter box lexicographically (declaration order, each
/// range inclusive; ranges may reference earlier parameters), evaluates both
/// sides per binding, and emits one report per binding. Evaluation errors
/// propagate as EvalError tagged with the offending binding.
std::vector<BindingReport> run_spec(const IdentitySpec& spec);

}  // namespace binsum::dsl
