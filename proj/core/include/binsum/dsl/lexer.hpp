#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "binsum/dsl/ast.hpp"

namespace binsum::dsl {

enum class TokenKind {
    Identifier,
    IntLiteral,
    StringLiteral,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    DotDot,
    Comma,
    Semicolon,
    Equals,
    LBrace,
    RBrace,
    LParen,
    RParen,
    KwIdentity,
    KwParams,
    KwIn,
    KwLhs,
    KwRhs,
    EndOfInput,
};

const char* token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string text;  // identifier name or string contents
    Integer value;     // IntLiteral only
    SourcePos pos;
};

/// Lexical or syntactic error, positioned. what() includes the position.
class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, const std::string& message);

    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

/// Splits an identity source into tokens, skipping whitespace and '#' line
/// comments. Every token carries its 1-based line/column. Throws ParseError
/// on any character outside the language.
std::vector<Token> tokenize(std::string_view source);

}  // namespace binsum::dsl
