#pragma once

#include "binsum/integer.hpp"

namespace binsum {

/// The integer parameters (n, b, c) of the sum
///   S_n(b,c;x) = sum_{k=0}^{n} (-1)^k C(n,k) x^k / C(b+k,c).
///
/// Validated domain: n >= 0 and 1 <= c <= b. Outside it the sum itself
/// degenerates -- c = 0 zeroes the Frisch prefactor while the sum stays
/// nonzero, and b < c divides by C(b+k,c) = 0 for small k -- so both are
/// rejected at construction with a descriptive error.
struct ParamTriple {
    ParamTriple(Natural n, Natural b, Natural c);

    Natural n;
    Natural b;
    Natural c;

    bool operator==(const ParamTriple& other) const = default;
};

}  // namespace binsum
