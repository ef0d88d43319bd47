#include "binsum/rational.hpp"

#include <ostream>

namespace binsum {

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator: " + num.get_str() + "/0");
    value_.canonicalize();
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(mpq_class(value_ + rhs.value_));
}

Rational Rational::operator-(const Rational& rhs) const {
    return Rational(mpq_class(value_ - rhs.value_));
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(mpq_class(value_ * rhs.value_));
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.is_zero())
        throw std::domain_error("rational division by zero");
    return Rational(mpq_class(value_ / rhs.value_));
}

Rational Rational::reciprocal() const {
    if (is_zero())
        throw std::domain_error("reciprocal of zero");
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
    return Rational(inv);
}

std::string Rational::fraction_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_string() const {
    return is_integer() ? value_.get_num().get_str() : fraction_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace binsum
