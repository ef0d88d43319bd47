#pragma once

#include <vector>

#include "binsum/integer.hpp"
#include "binsum/param_triple.hpp"
#include "binsum/polynomial.hpp"
#include "binsum/rational.hpp"

namespace binsum {

/// Outcome of comparing both sides of the identity at one parameter triple.
/// difference = lhs - rhs always, and equal holds exactly when the
/// difference is the zero polynomial.
struct CheckReport {
    ParamTriple params;
    Polynomial lhs;
    Polynomial rhs;
    Polynomial difference;
    bool equal;
};

/// A parameter triple at which the two sides differ, with the (nonzero)
/// difference polynomial as the witness.
struct Counterexample {
    ParamTriple params;
    Polynomial difference;
};

/// S_n(b,c;x) = sum_{k=0}^{n} (-1)^k C(n,k) x^k / C(b+k,c), degree exactly n.
Polynomial definitional_sum(const ParamTriple& params);

/// The claimed closed form
///   [c/(n+c)] [1/C(n+b, b-c)] 2F1(-n, c+1; n+c+1; x)
/// expanded through the terminating series (so n = 0 needs no special case).
Polynomial claimed_closed_form(const ParamTriple& params);

/// S_n(b,c;1) by Frisch's identity: c/(n+c) * 1/C(n+b, b-c).
Rational frisch_value(const ParamTriple& params);

/// True iff the definitional sum evaluated at x = 1 equals frisch_value.
/// Holds for every valid triple; this is the trusted base case the claimed
/// closed form fails to recover.
bool check_frisch(const ParamTriple& params);

/// Builds both sides as exact polynomials and reports their difference.
CheckReport compare_identity(const ParamTriple& params);

/// Sweeps 0 <= n <= n_max, 1 <= c <= b <= b_max in lexicographic (n, b, c)
/// order and collects every triple where the sides differ. Requires
/// b_max >= 1. The result order is the iteration order.
std::vector<Counterexample> search_counterexamples(const Natural& n_max,
                                                   const Natural& b_max);

}  // namespace binsum
