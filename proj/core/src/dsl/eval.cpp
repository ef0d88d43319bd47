#include "binsum/dsl/eval.hpp"

#include <optional>
#include <utility>

#include "binsum/combinatorics.hpp"
#include "binsum/hypergeometric.hpp"

namespace binsum::dsl {

EvalError::EvalError(SourcePos pos, const std::string& message)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.column) + ": " + message),
      pos_(pos) {}

namespace {

unsigned long checked_ulong(const Integer& value, SourcePos pos, const char* what) {
    if (!value.fits_ulong_p())
        throw EvalError(pos, std::string(what) + " too large: " + value.get_str());
    return value.get_ui();
}

Rational rational_pow(const Rational& base, const Integer& exponent, SourcePos pos) {
    if (exponent >= 0) {
        const unsigned long e = checked_ulong(exponent, pos, "exponent");
        Integer num, den;
        mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
        return Rational(num, den);
    }
    if (base.is_zero())
        throw EvalError(pos, "zero raised to a negative power");
    return rational_pow(base.reciprocal(), Integer(-exponent), pos);
}

class Evaluator {
public:
    explicit Evaluator(Bindings bindings) : bindings_(std::move(bindings)) {}

    Polynomial eval(const Expr& expr) {
        return std::visit([&](const auto& node) { return eval_node(expr.pos, node); },
                          expr.node);
    }

private:
    Polynomial eval_node(SourcePos, const IntLit& lit) {
        return Polynomial::constant(Rational(lit.value));
    }

    Polynomial eval_node(SourcePos pos, const ParamRef& ref) {
        const auto it = bindings_.find(ref.name);
        if (it == bindings_.end())
            throw EvalError(pos, "unbound identifier '" + ref.name + "'");
        return Polynomial::constant(Rational(it->second));
    }

    Polynomial eval_node(SourcePos, const VarX&) { return Polynomial::variable(); }

    Polynomial eval_node(SourcePos, const Negate& node) { return -eval(*node.operand); }

    Polynomial eval_node(SourcePos pos, const BinaryOp& node) {
        switch (node.op) {
            case '+': return eval(*node.lhs) + eval(*node.rhs);
            case '-': return eval(*node.lhs) - eval(*node.rhs);
            case '*': return eval(*node.lhs) * eval(*node.rhs);
            case '/': {
                Polynomial dividend = eval(*node.lhs);
                Polynomial divisor = eval(*node.rhs);
                if (divisor.degree() > 0)
                    throw EvalError(pos, "division by a non-constant divisor (degree " +
                                             std::to_string(divisor.degree()) + ")");
                if (divisor.is_zero())
                    throw EvalError(pos, "division by zero");
                return dividend * divisor.coefficient(0).reciprocal();
            }
            case '^': return eval_power(pos, node);
        }
        throw EvalError(pos, std::string("unsupported operator '") + node.op + "'");
    }

    Polynomial eval_power(SourcePos pos, const BinaryOp& node) {
        const Integer exponent = const_integer(*node.rhs, "exponent");
        Polynomial base = eval(*node.lhs);
        if (base.degree() <= 0) {
            // Constant base: any integer exponent of a nonzero constant.
            return Polynomial::constant(rational_pow(base.coefficient(0), exponent, pos));
        }
        if (exponent < 0)
            throw EvalError(pos, "negative exponent requires a constant base");
        return pow(base, checked_ulong(exponent, pos, "exponent"));
    }

    Polynomial eval_node(SourcePos pos, const CallOp& node) {
        switch (node.fn) {
            case Builtin::Binom: {
                const Integer m = const_integer(*node.args[0], "binom first argument");
                const Integer r = const_integer(*node.args[1], "binom second argument");
                if (m < 0)
                    throw EvalError(node.args[0]->pos,
                                    "binom first argument must be non-negative, got " +
                                        m.get_str());
                return Polynomial::constant(Rational(binomial(Natural(m), r)));
            }
            case Builtin::Fact: {
                const Integer m = const_integer(*node.args[0], "fact argument");
                if (m < 0)
                    throw EvalError(node.args[0]->pos,
                                    "fact argument must be non-negative, got " + m.get_str());
                return Polynomial::constant(Rational(factorial(Natural(m))));
            }
            case Builtin::Poch: {
                const Integer base = const_integer(*node.args[0], "poch first argument");
                const Integer count = const_integer(*node.args[1], "poch second argument");
                if (count < 0)
                    throw EvalError(node.args[1]->pos,
                                    "poch second argument must be non-negative, got " +
                                        count.get_str());
                return Polynomial::constant(Rational(pochhammer(base, Natural(count))));
            }
            case Builtin::Hyp2f1: return eval_hyp2f1(pos, node);
        }
        throw EvalError(pos, "unsupported call");
    }

    Polynomial eval_hyp2f1(SourcePos pos, const CallOp& node) {
        const Integer a = const_integer(*node.args[0], "hyp2f1 first argument");
        if (a > 0)
            throw EvalError(node.args[0]->pos,
                            "hyp2f1 first argument must be a non-positive integer "
                            "(terminating series), got " +
                                a.get_str());
        const Integer upper = const_integer(*node.args[1], "hyp2f1 second argument");
        const Integer lower = const_integer(*node.args[2], "hyp2f1 third argument");
        if (!std::holds_alternative<VarX>(node.args[3]->node))
            throw EvalError(node.args[3]->pos, "hyp2f1 fourth argument must be the variable x");
        try {
            return hyp2f1_terminating(TerminatingF21Params(Natural(-a), upper, lower));
        } catch (const std::domain_error& e) {
            throw EvalError(pos, e.what());
        }
    }

    Polynomial eval_node(SourcePos pos, const SumOp& node) {
        const Integer lo = const_integer(*node.lo, "sum lower bound");
        const Integer hi = const_integer(*node.hi, "sum upper bound");
        if (lo > hi + 1)
            throw EvalError(pos, "sum bounds out of order: lo = " + lo.get_str() +
                                     ", hi = " + hi.get_str());

        // The index shadows any outer binding of the same name for the body.
        std::optional<Integer> saved;
        const auto it = bindings_.find(node.index);
        if (it != bindings_.end())
            saved = it->second;

        Polynomial total;
        for (Integer k = lo; k <= hi; ++k) {
            bindings_[node.index] = k;
            total = total + eval(*node.body);
        }

        if (saved)
            bindings_[node.index] = *saved;
        else
            bindings_.erase(node.index);
        return total;
    }

    // Evaluates a subexpression that must come out as a constant integer.
    Integer const_integer(const Expr& expr, const char* what) {
        const Polynomial value = eval(expr);
        if (value.degree() > 0)
            throw EvalError(expr.pos, std::string(what) + " must be a constant, got a degree-" +
                                          std::to_string(value.degree()) + " polynomial");
        const Rational constant = value.coefficient(0);
        if (!constant.is_integer())
            throw EvalError(expr.pos, std::string(what) + " must be an integer, got " +
                                          constant.to_string());
        return constant.numerator();
    }

    Bindings bindings_;
};

}  // namespace

Polynomial eval_expr(const Expr& expr, const Bindings& bindings) {
    return Evaluator(bindings).eval(expr);
}

}  // namespace binsum::dsl
