#include "binsum/checker.hpp"

#include <stdexcept>
#include <utility>

#include "binsum/combinatorics.hpp"
#include "binsum/hypergeometric.hpp"

namespace binsum {

Polynomial definitional_sum(const ParamTriple& params) {
    const unsigned long n = params.n.as_ulong();
    const Integer& b = params.b.value();
    const Integer& c = params.c.value();
    std::vector<Rational> coefficients;
    coefficients.reserve(n + 1);
    for (unsigned long k = 0; k <= n; ++k) {
        Integer numer = binomial(params.n, Integer(k));
        if (k % 2 == 1)
            numer = -numer;
        coefficients.emplace_back(numer, binomial(Natural(b + k), c));
    }
    return Polynomial(std::move(coefficients));
}

Polynomial claimed_closed_form(const ParamTriple& params) {
    const Integer& n = params.n.value();
    const Integer& c = params.c.value();
    const Polynomial series =
        hyp2f1_terminating(TerminatingF21Params(params.n, c + 1, n + c + 1));
    return frisch_value(params) * series;
}

Rational frisch_value(const ParamTriple& params) {
    const Integer& n = params.n.value();
    const Integer& b = params.b.value();
    const Integer& c = params.c.value();
    return Rational(c, n + c) * Rational(Integer(1), binomial(Natural(n + b), b - c));
}

bool check_frisch(const ParamTriple& params) {
    return definitional_sum(params).evaluate(Rational(1)) == frisch_value(params);
}

CheckReport compare_identity(const ParamTriple& params) {
    Polynomial lhs = definitional_sum(params);
    Polynomial rhs = claimed_closed_form(params);
    Polynomial difference = lhs - rhs;
    const bool equal = difference.is_zero();
    return CheckReport{params, std::move(lhs), std::move(rhs), std::move(difference), equal};
}

std::vector<Counterexample> search_counterexamples(const Natural& n_max,
                                                   const Natural& b_max) {
    if (b_max.value() < 1)
        throw std::domain_error("search requires b_max >= 1, got " + b_max.value().get_str());

    std::vector<Counterexample> found;
    const unsigned long n_limit = n_max.as_ulong();
    const unsigned long b_limit = b_max.as_ulong();
    for (unsigned long n = 0; n <= n_limit; ++n)
        for (unsigned long b = 1; b <= b_limit; ++b)
            for (unsigned long c = 1; c <= b; ++c) {
                CheckReport report = compare_identity(ParamTriple(n, b, c));
                if (!report.equal)
                    found.push_back(
                        Counterexample{report.params, std::move(report.difference)});
            }
    return found;
}

}  // namespace binsum
