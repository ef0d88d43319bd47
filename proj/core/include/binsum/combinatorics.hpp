#pragma once

#include "binsum/integer.hpp"

namespace binsum {

/// m! exactly; factorial(0) = 1.
Integer factorial(const Natural& m);

/// C(m, r) = m!/(r!(m-r)!) for 0 <= r <= m, and 0 outside that range.
/// Total by the out-of-range-is-zero convention.
Integer binomial(const Natural& m, const Integer& r);

/// Rising factorial (a)_j = a(a+1)...(a+j-1), with (a)_0 = 1.
/// Negative bases are allowed; (-n)_j vanishes for j > n, which is what
/// terminates the hypergeometric series built on top of this.
Integer pochhammer(const Integer& base, const Natural& count);

}  // namespace binsum
