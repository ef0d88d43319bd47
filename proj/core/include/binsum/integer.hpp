#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace binsum {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Arbitrary-precision integer constrained to be non-negative.
///
/// Construction from a negative value throws std::domain_error, so a
/// Natural in hand is always a valid count/index.
class Natural {
public:
    Natural() : value_(0) {}

    Natural(Integer value) : value_(std::move(value)) {
        if (value_ < 0)
            throw std::domain_error("Natural requires a non-negative value, got " +
                                    value_.get_str());
    }

    Natural(long value) : Natural(Integer(value)) {}
    Natural(int value) : Natural(Integer(value)) {}
    Natural(unsigned long value) : value_(value) {}

    const Integer& value() const { return value_; }

    /// The value as an unsigned long; throws if it does not fit.
    unsigned long as_ulong() const {
        if (!value_.fits_ulong_p())
            throw std::overflow_error("Natural value too large: " + value_.get_str());
        return value_.get_ui();
    }

    bool operator==(const Natural& other) const = default;

private:
    Integer value_;
};

}  // namespace binsum
