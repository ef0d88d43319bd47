#pragma once

#include <iosfwd>
#include <string>

#include "binsum/integer.hpp"

namespace binsum {

/// Exact rational number in canonical reduced form.
///
/// Invariants (enforced at construction, preserved by every operation):
///  - denominator > 0
///  - gcd(|numerator|, denominator) = 1
///  - zero is represented uniquely as 0/1
///
/// Equality is therefore a field-by-field comparison, which the canonical
/// polynomial form relies on.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(n) {}
    Rational(Integer n) : value_(std::move(n)) {}

    /// num/den, reduced. Throws std::domain_error if den == 0.
    Rational(const Integer& num, const Integer& den);

    const Integer numerator() const { return value_.get_num(); }
    const Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;

    /// Exact division. Throws std::domain_error on a zero divisor.
    Rational operator/(const Rational& rhs) const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    Rational reciprocal() const;

    bool operator==(const Rational& rhs) const { return value_ == rhs.value_; }
    bool operator<(const Rational& rhs) const { return value_ < rhs.value_; }

    /// Always "p/q", e.g. "3/1"; the report (JSON) form.
    std::string fraction_string() const;

    /// "p" when the value is integral, otherwise "p/q"; the human-readable form.
    std::string to_string() const;

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace binsum
