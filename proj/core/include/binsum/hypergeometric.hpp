#pragma once

#include "binsum/integer.hpp"
#include "binsum/polynomial.hpp"
#include "binsum/rational.hpp"

namespace binsum {

/// Parameters of a terminating Gauss series 2F1(-n, upper; lower; x).
///
/// lower >= 1 guarantees that no lower-Pochhammer factor (lower)_j vanishes
/// within the n+1 retained terms; violation throws std::domain_error.
struct TerminatingF21Params {
    TerminatingF21Params(Natural n, Integer upper, Integer lower);

    Natural n;
    Integer upper;
    Integer lower;
};

/// Expands 2F1(-n, upper; lower; x) as an exact polynomial of degree <= n:
///   sum_{j=0}^{n} (-1)^j C(n,j) (upper)_j / (lower)_j x^j
/// which equals the classical sum_{j} (-n)_j (upper)_j / ((lower)_j j!) x^j.
Polynomial hyp2f1_terminating(const TerminatingF21Params& params);

/// Unit-argument value of the terminating series via the Gamma-ratio form
///   Gamma(lower) Gamma(lower+n-upper) / (Gamma(lower+n) Gamma(lower-upper))
/// computed exactly through factorials. All four Gamma arguments must be
/// positive integers, otherwise std::domain_error; in particular n = 0 with
/// upper = lower hits Gamma(0) and is rejected (the series path handles
/// n = 0 directly).
Rational gauss_unit(const Natural& n, const Integer& upper, const Integer& lower);

/// Gamma(n+c+1) Gamma(2n) / (Gamma(2n+c+1) Gamma(n)), exactly.
///
/// This is the unit-argument value of 2F1(-n, c+1; n+c+1; x): the factor by
/// which the claimed closed form misses its own base case at x = 1. It never
/// equals 1 for n, c >= 1. Requires n >= 1 (Gamma(0) pole) and c >= 1.
Rational contradiction_ratio(const Natural& n, const Natural& c);

}  // namespace binsum
