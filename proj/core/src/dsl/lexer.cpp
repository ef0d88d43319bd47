#include "binsum/dsl/lexer.hpp"

#include <cctype>
#include <unordered_map>

namespace binsum::dsl {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.column) + ": " + message),
      pos_(pos) {}

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::IntLiteral: return "integer";
        case TokenKind::StringLiteral: return "string";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Caret: return "'^'";
        case TokenKind::DotDot: return "'..'";
        case TokenKind::Comma: return "','";
        case TokenKind::Semicolon: return "';'";
        case TokenKind::Equals: return "'='";
        case TokenKind::LBrace: return "'{'";
        case TokenKind::RBrace: return "'}'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::KwIdentity: return "'identity'";
        case TokenKind::KwParams: return "'params'";
        case TokenKind::KwIn: return "'in'";
        case TokenKind::KwLhs: return "'lhs'";
        case TokenKind::KwRhs: return "'rhs'";
        case TokenKind::EndOfInput: return "end of input";
    }
    return "?";
}

namespace {

const std::unordered_map<std::string_view, TokenKind> kKeywords = {
    {"identity", TokenKind::KwIdentity},
    {"params", TokenKind::KwParams},
    {"in", TokenKind::KwIn},
    {"lhs", TokenKind::KwLhs},
    {"rhs", TokenKind::KwRhs},
};

class Lexer {
public:
    explicit Lexer(std::string_view source) : source_(source) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        for (;;) {
            skip_trivia();
            if (at_end()) {
                tokens.push_back({TokenKind::EndOfInput, "", Integer(0), pos()});
                return tokens;
            }
            tokens.push_back(next_token());
        }
    }

private:
    bool at_end() const { return offset_ >= source_.size(); }
    char current() const { return source_[offset_]; }

    SourcePos pos() const { return {line_, column_}; }

    void advance() {
        if (source_[offset_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++offset_;
    }

    void skip_trivia() {
        while (!at_end()) {
            const char c = current();
            if (c == '#') {
                while (!at_end() && current() != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    Token next_token() {
        const SourcePos start = pos();
        const char c = current();

        if (std::isdigit(static_cast<unsigned char>(c)))
            return integer_literal(start);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return identifier(start);
        if (c == '"')
            return string_literal(start);

        advance();
        switch (c) {
            case '+': return {TokenKind::Plus, "+", Integer(0), start};
            case '-': return {TokenKind::Minus, "-", Integer(0), start};
            case '*': return {TokenKind::Star, "*", Integer(0), start};
            case '/': return {TokenKind::Slash, "/", Integer(0), start};
            case '^': return {TokenKind::Caret, "^", Integer(0), start};
            case ',': return {TokenKind::Comma, ",", Integer(0), start};
            case ';': return {TokenKind::Semicolon, ";", Integer(0), start};
            case '=': return {TokenKind::Equals, "=", Integer(0), start};
            case '{': return {TokenKind::LBrace, "{", Integer(0), start};
            case '}': return {TokenKind::RBrace, "}", Integer(0), start};
            case '(': return {TokenKind::LParen, "(", Integer(0), start};
            case ')': return {TokenKind::RParen, ")", Integer(0), start};
            case '.':
                if (!at_end() && current() == '.') {
                    advance();
                    return {TokenKind::DotDot, "..", Integer(0), start};
                }
                throw ParseError(start, "unexpected character '.' (did you mean '..'?)");
            default:
                throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
    }

    Token integer_literal(SourcePos start) {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(current()))) {
            digits += current();
            advance();
        }
        return {TokenKind::IntLiteral, digits, Integer(digits), start};
    }

    Token identifier(SourcePos start) {
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(current())) ||
                             current() == '_')) {
            name += current();
            advance();
        }
        const auto keyword = kKeywords.find(name);
        if (keyword != kKeywords.end())
            return {keyword->second, name, Integer(0), start};
        return {TokenKind::Identifier, name, Integer(0), start};
    }

    Token string_literal(SourcePos start) {
        advance();  // opening quote
        std::string contents;
        while (!at_end() && current() != '"' && current() != '\n') {
            contents += current();
            advance();
        }
        if (at_end() || current() != '"')
            throw ParseError(start, "unterminated string literal");
        advance();  // closing quote
        return {TokenKind::StringLiteral, contents, Integer(0), start};
    }

    std::string_view source_;
    std::size_t offset_ = 0;
    int line_ = 1;
    int column_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
    return Lexer(source).run();
}

}  // namespace binsum::dsl
