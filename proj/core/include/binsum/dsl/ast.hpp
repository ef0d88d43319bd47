#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "binsum/integer.hpp"

namespace binsum::dsl {

/// 1-based position in an identity source file.
struct SourcePos {
    int line = 0;
    int column = 0;

    bool operator==(const SourcePos& other) const = default;
};

enum class Builtin { Binom, Fact, Poch, Hyp2f1 };

const char* builtin_name(Builtin fn);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct IntLit {
    Integer value;
};

/// Reference to a declared parameter (or a summation index in scope).
struct ParamRef {
    std::string name;
};

/// The formal variable x.
struct VarX {};

struct Negate {
    ExprPtr operand;
};

/// One of + - * / ^.
struct BinaryOp {
    char op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct CallOp {
    Builtin fn;
    std::vector<ExprPtr> args;
};

/// sum(index, lo, hi, body); the index is bound for the body's scope only.
struct SumOp {
    std::string index;
    ExprPtr lo;
    ExprPtr hi;
    ExprPtr body;
};

struct Expr {
    SourcePos pos;
    std::variant<IntLit, ParamRef, VarX, Negate, BinaryOp, CallOp, SumOp> node;
};

/// Half of a parameter range: an integer literal or an earlier parameter.
struct Bound {
    SourcePos pos;
    std::variant<Integer, std::string> value;
};

struct ParamDecl {
    SourcePos pos;
    std::string name;
    Bound lo;
    Bound hi;
};

/// One identity block: named parameter box plus the two sides to compare.
struct IdentitySpec {
    std::string name;
    std::vector<ParamDecl> params;
    ExprPtr lhs;
    ExprPtr rhs;
};

/// Structural equality, ignoring source positions.
bool ast_equal(const Expr& a, const Expr& b);
bool spec_equal(const IdentitySpec& a, const IdentitySpec& b);

}  // namespace binsum::dsl
