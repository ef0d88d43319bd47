#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "binsum/rational.hpp"

namespace binsum {

/// Dense univariate polynomial in x over Rational, ascending coefficients.
///
/// Canonical form: the highest stored coefficient is nonzero; the zero
/// polynomial stores an empty list. Equality is structural over the
/// canonical form, never sampling-based -- structural equality of canonical
/// forms is the exact polynomial-identity test.
class Polynomial {
public:
    Polynomial() = default;

    /// Trims trailing zeros to canonical form.
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(Rational value);

    /// The monomial x.
    static Polynomial variable();

    const std::vector<Rational>& coefficients() const { return coefficients_; }

    /// Coefficient of x^i; zero beyond the stored degree.
    Rational coefficient(std::size_t i) const;

    bool is_zero() const { return coefficients_.empty(); }

    /// Degree of the polynomial; -1 for the zero polynomial.
    std::ptrdiff_t degree() const {
        return static_cast<std::ptrdiff_t>(coefficients_.size()) - 1;
    }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& scale) const;

    /// Exact evaluation by Horner's scheme.
    Rational evaluate(const Rational& point) const;

    bool operator==(const Polynomial& rhs) const = default;

    /// "1/3 - 1/2*x + 1/5*x^2" style, lowest degree first; "0" when zero.
    std::string to_string() const;

    /// Ascending "p/q" coefficient strings, the report (JSON) form.
    std::vector<std::string> coefficient_strings() const;

private:
    void trim();

    std::vector<Rational> coefficients_;
};

Polynomial operator*(const Rational& scale, const Polynomial& p);

/// p^exponent by repeated squaring; p^0 = 1.
Polynomial pow(const Polynomial& base, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace binsum
