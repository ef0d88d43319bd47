#include "binsum/dsl/parser.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace binsum::dsl {

const char* builtin_name(Builtin fn) {
    switch (fn) {
        case Builtin::Binom: return "binom";
        case Builtin::Fact: return "fact";
        case Builtin::Poch: return "poch";
        case Builtin::Hyp2f1: return "hyp2f1";
    }
    return "?";
}

namespace {

ExprPtr make_expr(SourcePos pos, auto node) {
    return std::make_unique<Expr>(Expr{pos, std::move(node)});
}

constexpr std::size_t builtin_arity(Builtin fn) {
    switch (fn) {
        case Builtin::Binom: return 2;
        case Builtin::Fact: return 1;
        case Builtin::Poch: return 2;
        case Builtin::Hyp2f1: return 4;
    }
    return 0;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    std::vector<IdentitySpec> parse_file() {
        std::vector<IdentitySpec> specs;
        do {
            specs.push_back(parse_identity());
        } while (peek().kind != TokenKind::EndOfInput);
        return specs;
    }

private:
    const Token& peek() const { return tokens_[index_]; }

    Token advance() { return tokens_[index_++]; }

    Token expect(TokenKind kind) {
        if (peek().kind != kind)
            throw ParseError(peek().pos, std::string("expected ") + token_kind_name(kind) +
                                             ", found " + token_kind_name(peek().kind));
        return advance();
    }

    bool accept(TokenKind kind) {
        if (peek().kind != kind)
            return false;
        ++index_;
        return true;
    }

    IdentitySpec parse_identity() {
        expect(TokenKind::KwIdentity);
        IdentitySpec spec;
        spec.name = expect(TokenKind::StringLiteral).text;
        expect(TokenKind::LBrace);

        expect(TokenKind::KwParams);
        spec.params.push_back(parse_param(spec));
        while (accept(TokenKind::Comma))
            spec.params.push_back(parse_param(spec));
        expect(TokenKind::Semicolon);

        expect(TokenKind::KwLhs);
        expect(TokenKind::Equals);
        spec.lhs = parse_expr();
        expect(TokenKind::Semicolon);

        expect(TokenKind::KwRhs);
        expect(TokenKind::Equals);
        spec.rhs = parse_expr();
        expect(TokenKind::Semicolon);

        expect(TokenKind::RBrace);

        check_sum_indices(spec);
        return spec;
    }

    ParamDecl parse_param(const IdentitySpec& spec) {
        const Token name = expect(TokenKind::Identifier);
        if (name.text == "x")
            throw ParseError(name.pos,
                             "parameter may not be named 'x' (reserved for the formal variable)");
        const bool duplicate = std::any_of(spec.params.begin(), spec.params.end(),
                                           [&](const ParamDecl& p) { return p.name == name.text; });
        if (duplicate)
            throw ParseError(name.pos, "duplicate parameter '" + name.text + "'");

        expect(TokenKind::KwIn);
        Bound lo = parse_bound(spec);
        expect(TokenKind::DotDot);
        Bound hi = parse_bound(spec);
        return ParamDecl{name.pos, name.text, std::move(lo), std::move(hi)};
    }

    Bound parse_bound(const IdentitySpec& spec) {
        if (peek().kind == TokenKind::IntLiteral) {
            const Token t = advance();
            return Bound{t.pos, t.value};
        }
        const Token t = expect(TokenKind::Identifier);
        const bool declared = std::any_of(spec.params.begin(), spec.params.end(),
                                          [&](const ParamDecl& p) { return p.name == t.text; });
        if (!declared)
            throw ParseError(t.pos, "range bound references undeclared parameter '" + t.text +
                                        "' (only previously declared parameters are allowed)");
        return Bound{t.pos, t.text};
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            const Token op = advance();
            ExprPtr rhs = parse_term();
            lhs = make_expr(op.pos, BinaryOp{op.kind == TokenKind::Plus ? '+' : '-',
                                             std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
            const Token op = advance();
            ExprPtr rhs = parse_unary();
            lhs = make_expr(op.pos, BinaryOp{op.kind == TokenKind::Star ? '*' : '/',
                                             std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (peek().kind == TokenKind::Minus) {
            const Token op = advance();
            return make_expr(op.pos, Negate{parse_unary()});
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (peek().kind == TokenKind::Caret) {
            const Token op = advance();
            ExprPtr exponent = parse_unary();
            return make_expr(op.pos, BinaryOp{'^', std::move(base), std::move(exponent)});
        }
        return base;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::IntLiteral: {
                const Token lit = advance();
                return make_expr(lit.pos, IntLit{lit.value});
            }
            case TokenKind::LParen: {
                advance();
                ExprPtr inner = parse_expr();
                expect(TokenKind::RParen);
                return inner;
            }
            case TokenKind::Identifier: {
                const Token name = advance();
                if (peek().kind == TokenKind::LParen)
                    return parse_call(name);
                if (name.text == "x")
                    return make_expr(name.pos, VarX{});
                return make_expr(name.pos, ParamRef{name.text});
            }
            default:
                throw ParseError(t.pos, std::string("expected an expression, found ") +
                                            token_kind_name(t.kind));
        }
    }

    ExprPtr parse_call(const Token& name) {
        std::vector<ExprPtr> args;
        expect(TokenKind::LParen);
        args.push_back(parse_expr());
        while (accept(TokenKind::Comma))
            args.push_back(parse_expr());
        expect(TokenKind::RParen);

        if (name.text == "sum")
            return make_sum(name, std::move(args));

        Builtin fn;
        if (name.text == "binom")
            fn = Builtin::Binom;
        else if (name.text == "fact")
            fn = Builtin::Fact;
        else if (name.text == "poch")
            fn = Builtin::Poch;
        else if (name.text == "hyp2f1")
            fn = Builtin::Hyp2f1;
        else
            throw ParseError(name.pos, "unknown function '" + name.text + "'");

        if (args.size() != builtin_arity(fn))
            throw ParseError(name.pos, std::string(builtin_name(fn)) + " expects " +
                                           std::to_string(builtin_arity(fn)) +
                                           " argument(s), got " + std::to_string(args.size()));
        return make_expr(name.pos, CallOp{fn, std::move(args)});
    }

    ExprPtr make_sum(const Token& name, std::vector<ExprPtr> args) {
        if (args.size() != 4)
            throw ParseError(name.pos,
                             "sum expects 4 arguments (index, lo, hi, body), got " +
                                 std::to_string(args.size()));
        const Expr& index_expr = *args[0];
        const auto* ref = std::get_if<ParamRef>(&index_expr.node);
        if (ref == nullptr) {
            if (std::holds_alternative<VarX>(index_expr.node))
                throw ParseError(index_expr.pos, "summation index may not be 'x'");
            throw ParseError(index_expr.pos, "sum index must be a plain identifier");
        }
        return make_expr(name.pos, SumOp{ref->name, std::move(args[1]), std::move(args[2]),
                                         std::move(args[3])});
    }

    // Parameters may not double as summation indices anywhere in the block.
    void check_sum_indices(const IdentitySpec& spec) {
        std::set<std::string> indices;
        collect_sum_indices(*spec.lhs, indices);
        collect_sum_indices(*spec.rhs, indices);
        for (const ParamDecl& p : spec.params)
            if (indices.contains(p.name))
                throw ParseError(p.pos, "parameter '" + p.name +
                                            "' is also used as a summation index");
    }

    static void collect_sum_indices(const Expr& e, std::set<std::string>& out) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Negate>) {
                    collect_sum_indices(*node.operand, out);
                } else if constexpr (std::is_same_v<T, BinaryOp>) {
                    collect_sum_indices(*node.lhs, out);
                    collect_sum_indices(*node.rhs, out);
                } else if constexpr (std::is_same_v<T, CallOp>) {
                    for (const ExprPtr& arg : node.args)
                        collect_sum_indices(*arg, out);
                } else if constexpr (std::is_same_v<T, SumOp>) {
                    out.insert(node.index);
                    collect_sum_indices(*node.lo, out);
                    collect_sum_indices(*node.hi, out);
                    collect_sum_indices(*node.body, out);
                }
            },
            e.node);
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace

std::vector<IdentitySpec> parse_identity_file(std::string_view source) {
    return Parser(tokenize(source)).parse_file();
}

namespace {

bool bound_equal(const Bound& a, const Bound& b) {
    return a.value == b.value;
}

}  // namespace

bool ast_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index())
        return false;
    return std::visit(
        [&](const auto& lhs) {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, IntLit>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, ParamRef>) {
                return lhs.name == rhs.name;
            } else if constexpr (std::is_same_v<T, VarX>) {
                return true;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return ast_equal(*lhs.operand, *rhs.operand);
            } else if constexpr (std::is_same_v<T, BinaryOp>) {
                return lhs.op == rhs.op && ast_equal(*lhs.lhs, *rhs.lhs) &&
                       ast_equal(*lhs.rhs, *rhs.rhs);
            } else if constexpr (std::is_same_v<T, CallOp>) {
                if (lhs.fn != rhs.fn || lhs.args.size() != rhs.args.size())
                    return false;
                for (std::size_t i = 0; i < lhs.args.size(); ++i)
                    if (!ast_equal(*lhs.args[i], *rhs.args[i]))
                        return false;
                return true;
            } else if constexpr (std::is_same_v<T, SumOp>) {
                return lhs.index == rhs.index && ast_equal(*lhs.lo, *rhs.lo) &&
                       ast_equal(*lhs.hi, *rhs.hi) && ast_equal(*lhs.body, *rhs.body);
            }
        },
        a.node);
}

bool spec_equal(const IdentitySpec& a, const IdentitySpec& b) {
    if (a.name != b.name || a.params.size() != b.params.size())
        return false;
    for (std::size_t i = 0; i < a.params.size(); ++i) {
        const ParamDecl& pa = a.params[i];
        const ParamDecl& pb = b.params[i];
        if (pa.name != pb.name || !bound_equal(pa.lo, pb.lo) || !bound_equal(pa.hi, pb.hi))
            return false;
    }
    return ast_equal(*a.lhs, *b.lhs) && ast_equal(*a.rhs, *b.rhs);
}

}  // namespace binsum::dsl
