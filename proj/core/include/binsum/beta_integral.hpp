#pragma once

#include "binsum/integer.hpp"
#include "binsum/param_triple.hpp"
#include "binsum/polynomial.hpp"
#include "binsum/rational.hpp"

namespace binsum {

/// Exponent pair of the Beta integral B(p,q) = integral_0^1 t^(p-1) (1-t)^(q-1) dt.
/// Both must be >= 1; the integration variable is eliminated analytically and
/// never materializes at runtime.
struct BetaParams {
    BetaParams(Natural p, Natural q);

    Natural p;
    Natural q;
};

/// B(p,q) = (p-1)!(q-1)!/(p+q-1)! exactly.
Rational beta_exact(const BetaParams& params);

/// The integral representation of S_n(b,c;x),
///
///   integral_0^1 t^c (1-t)^(b-c) [ (b+1)(1-x(1-t))^n - n x (1-t)(1-x(1-t))^(n-1) ] dt,
///
/// expanded by the binomial theorem and integrated term by term through
/// beta_exact, entirely in exact rationals:
///
///   sum_j C(n,j)(-x)^j (b+1) B(c+1, b-c+j+1)
///     - n x sum_j C(n-1,j)(-x)^j B(c+1, b-c+j+2).
///
/// Equals the definitional sum for every valid triple.
Polynomial integral_representation(const ParamTriple& params);

/// What integrating only the first bracketed term yields:
///   sum_j C(n,j)(-x)^j (b+1) B(c+1, b-c+j+1).
/// For n >= 1 this differs from the full representation by exactly the
/// integral of the dropped derivative term.
Polynomial truncated_first_term_integral(const ParamTriple& params);

}  // namespace binsum
