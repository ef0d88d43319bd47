#include "binsum/hypergeometric.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "binsum/combinatorics.hpp"

namespace binsum {

TerminatingF21Params::TerminatingF21Params(Natural n_, Integer upper_, Integer lower_)
    : n(std::move(n_)), upper(std::move(upper_)), lower(std::move(lower_)) {
    // lower >= 1 makes every (lower)_j factor for j <= n strictly positive.
    if (lower < 1)
        throw std::domain_error("2F1 lower parameter must be >= 1, got " + lower.get_str());
}

Polynomial hyp2f1_terminating(const TerminatingF21Params& params) {
    const unsigned long n = params.n.as_ulong();
    std::vector<Rational> coefficients;
    coefficients.reserve(n + 1);
    for (unsigned long j = 0; j <= n; ++j) {
        Integer numer = binomial(params.n, Integer(j)) * pochhammer(params.upper, j);
        if (j % 2 == 1)
            numer = -numer;
        coefficients.emplace_back(numer, pochhammer(params.lower, j));
    }
    return Polynomial(std::move(coefficients));
}

namespace {

// Gamma at a positive integer m, i.e. (m-1)!. Non-positive arguments are
// poles or outside the exact-integer domain and are rejected.
Integer integer_gamma(const Integer& argument, const char* role) {
    if (argument < 1)
        throw std::domain_error(std::string("Gamma argument ") + role + " = " +
                                argument.get_str() + " is not a positive integer");
    return factorial(Natural(argument - 1));
}

}  // namespace

Rational gauss_unit(const Natural& n, const Integer& upper, const Integer& lower) {
    const Integer& nv = n.value();
    const Integer num1 = integer_gamma(lower, "lower");
    const Integer num2 = integer_gamma(lower + nv - upper, "lower+n-upper");
    const Integer den1 = integer_gamma(lower + nv, "lower+n");
    const Integer den2 = integer_gamma(lower - upper, "lower-upper");
    return Rational(num1 * num2, den1 * den2);
}

Rational contradiction_ratio(const Natural& n, const Natural& c) {
    const Integer& nv = n.value();
    const Integer& cv = c.value();
    if (nv < 1)
        throw std::domain_error("contradiction ratio undefined for n = 0 (Gamma(0) pole)");
    if (cv < 1)
        throw std::domain_error("contradiction ratio requires c >= 1, got " + cv.get_str());
    // Gamma(n+c+1) Gamma(2n) / (Gamma(2n+c+1) Gamma(n)) via factorials.
    const Integer num = factorial(Natural(nv + cv)) * factorial(Natural(2 * nv - 1));
    const Integer den = factorial(Natural(2 * nv + cv)) * factorial(Natural(nv - 1));
    return Rational(num, den);
}

}  // namespace binsum
