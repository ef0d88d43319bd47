#include "binsum/beta_integral.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "binsum/combinatorics.hpp"

namespace binsum {

BetaParams::BetaParams(Natural p_, Natural q_) : p(std::move(p_)), q(std::move(q_)) {
    if (p.value() < 1 || q.value() < 1)
        throw std::domain_error("Beta parameters must be >= 1, got p = " +
                                p.value().get_str() + ", q = " + q.value().get_str());
}

Rational beta_exact(const BetaParams& params) {
    const Integer num =
        factorial(Natural(params.p.value() - 1)) * factorial(Natural(params.q.value() - 1));
    const Integer den = factorial(Natural(params.p.value() + params.q.value() - 1));
    return Rational(num, den);
}

namespace {

// sum_{j=0}^{count} C(count,j) (-x)^j scale B(c+1, b-c+j+offset), the shape
// both bracketed terms reduce to after binomial expansion.
Polynomial expanded_beta_sum(const Natural& count, const Integer& b, const Integer& c,
                             const Integer& offset, const Rational& scale) {
    const unsigned long terms = count.as_ulong();
    std::vector<Rational> coefficients;
    coefficients.reserve(terms + 1);
    for (unsigned long j = 0; j <= terms; ++j) {
        const Rational beta = beta_exact(BetaParams(Natural(c + 1), Natural(b - c + j + offset)));
        Rational coeff = Rational(binomial(count, Integer(j))) * beta * scale;
        if (j % 2 == 1)
            coeff = -coeff;
        coefficients.push_back(std::move(coeff));
    }
    return Polynomial(std::move(coefficients));
}

}  // namespace

Polynomial truncated_first_term_integral(const ParamTriple& params) {
    const Integer& b = params.b.value();
    const Integer& c = params.c.value();
    return expanded_beta_sum(params.n, b, c, 1, Rational(b + 1));
}

Polynomial integral_representation(const ParamTriple& params) {
    const Integer& n = params.n.value();
    const Integer& b = params.b.value();
    const Integer& c = params.c.value();

    Polynomial first = truncated_first_term_integral(params);
    if (n == 0)
        return first;  // the dropped term carries a factor n

    Polynomial omitted = expanded_beta_sum(Natural(n - 1), b, c, 2, Rational(1));
    return first - Rational(n) * (Polynomial::variable() * omitted);
}

}  // namespace binsum
