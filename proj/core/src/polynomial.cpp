#include "binsum/polynomial.hpp"

#include <algorithm>
#include <ostream>

namespace binsum {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

void Polynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero())
        coefficients_.pop_back();
}

Polynomial Polynomial::constant(Rational value) {
    return Polynomial({std::move(value)});
}

Polynomial Polynomial::variable() {
    return Polynomial({Rational(0), Rational(1)});
}

Rational Polynomial::coefficient(std::size_t i) const {
    return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> result;
    result.reserve(coefficients_.size());
    for (const auto& c : coefficients_)
        result.push_back(-c);
    return Polynomial(std::move(result));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    const std::size_t n = std::max(coefficients_.size(), rhs.coefficients_.size());
    std::vector<Rational> result;
    result.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        result.push_back(coefficient(i) + rhs.coefficient(i));
    return Polynomial(std::move(result));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    const std::size_t n = std::max(coefficients_.size(), rhs.coefficients_.size());
    std::vector<Rational> result;
    result.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        result.push_back(coefficient(i) - rhs.coefficient(i));
    return Polynomial(std::move(result));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero())
        return Polynomial();
    std::vector<Rational> result(coefficients_.size() + rhs.coefficients_.size() - 1,
                                 Rational(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j)
            result[i + j] += coefficients_[i] * rhs.coefficients_[j];
    return Polynomial(std::move(result));
}

Polynomial Polynomial::operator*(const Rational& scale) const {
    std::vector<Rational> result;
    result.reserve(coefficients_.size());
    for (const auto& c : coefficients_)
        result.push_back(c * scale);
    return Polynomial(std::move(result));
}

Polynomial operator*(const Rational& scale, const Polynomial& p) {
    return p * scale;
}

Rational Polynomial::evaluate(const Rational& point) const {
    Rational result(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        result = result * point + *it;
    return result;
}

Polynomial pow(const Polynomial& base, unsigned long exponent) {
    Polynomial result = Polynomial::constant(Rational(1));
    Polynomial square = base;
    while (exponent > 0) {
        if (exponent & 1)
            result = result * square;
        exponent >>= 1;
        if (exponent > 0)
            square = square * square;
    }
    return result;
}

namespace {

std::string term_string(const Rational& magnitude, std::size_t power) {
    std::string var;
    if (power == 1)
        var = "x";
    else if (power > 1)
        var = "x^" + std::to_string(power);

    if (var.empty())
        return magnitude.to_string();
    if (magnitude == Rational(1))
        return var;
    return magnitude.to_string() + "*" + var;
}

}  // namespace

std::string Polynomial::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        const Rational& c = coefficients_[i];
        if (c.is_zero())
            continue;
        const bool negative = c < Rational(0);
        const Rational magnitude = negative ? -c : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += term_string(magnitude, i);
    }
    return out;
}

std::vector<std::string> Polynomial::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coefficients_.size());
    for (const auto& c : coefficients_)
        out.push_back(c.fraction_string());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

}  // namespace binsum
