#include "binsum/combinatorics.hpp"

namespace binsum {

Integer factorial(const Natural& m) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), m.as_ulong());
    return result;
}

Integer binomial(const Natural& m, const Integer& r) {
    if (r < 0 || r > m.value())
        return 0;
    Integer result;
    mpz_bin_ui(result.get_mpz_t(), m.value().get_mpz_t(), Natural(r).as_ulong());
    return result;
}

Integer pochhammer(const Integer& base, const Natural& count) {
    const unsigned long j = count.as_ulong();
    Integer result = 1;
    Integer factor = base;
    for (unsigned long i = 0; i < j; ++i, ++factor)
        result *= factor;
    return result;
}

}  // namespace binsum
