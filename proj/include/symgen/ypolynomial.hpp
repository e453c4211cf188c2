#pragma once

#include <map>
#include <string>

#include "symgen/rational.hpp"

namespace symgen {

/// Laurent polynomial in u, where u^2 = y. Half-integer powers of y are odd
/// powers of u. Zero coefficients are never stored.
class YPolynomial {
public:
    using TermMap = std::map<int, Rational>;  // u-exponent -> coefficient

    YPolynomial() = default;
    YPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    YPolynomial(long constant) : YPolynomial(Rational(constant)) {}  // NOLINT
    YPolynomial(int constant) : YPolynomial(Rational(constant)) {}   // NOLINT

    static YPolynomial u_monomial(const Rational& coefficient, int u_exponent);
    static YPolynomial y_monomial(const Rational& coefficient, int y_exponent) {
        return u_monomial(coefficient, 2 * y_exponent);
    }
    static YPolynomial y() { return y_monomial(1, 1); }
    static YPolynomial u() { return u_monomial(1, 1); }

    const TermMap& terms() const { return terms_; }
    Rational coefficient(int u_exponent) const;
    /// Coefficient of y^k, i.e. of u^(2k).
    Rational y_coefficient(int y_exponent) const { return coefficient(2 * y_exponent); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const { return coefficient(0); }
    bool has_half_integer_powers() const;

    YPolynomial& operator+=(const YPolynomial& rhs);
    YPolynomial& operator-=(const YPolynomial& rhs);
    YPolynomial& operator*=(const YPolynomial& rhs);
    YPolynomial& operator*=(const Rational& scalar);
    YPolynomial& operator/=(const Rational& scalar);

    friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
    friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
    friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);
    friend YPolynomial operator/(YPolynomial a, const Rational& s) { return a /= s; }
    YPolynomial operator-() const;

    friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

    YPolynomial pow(unsigned exponent) const;

    /// y -> y^l, i.e. every u-exponent multiplied by l (l >= 1).
    YPolynomial substitute_power(int l) const;
    /// Value at u = 1 (hence y = 1).
    Rational evaluate_at_one() const;
    /// u^(2*shift) * P(1/u): the Serre-duality reflection y^shift * P(1/y).
    YPolynomial reflect(int y_shift) const;

    /// Human-readable form, ascending powers: "1 + y", "1 - 3*y", "1/2*y^3/2".
    std::string to_string() const;

private:
    void add_term(int u_exponent, const Rational& coefficient);

    TermMap terms_;
};

/// Free function form of YPolynomial::substitute_power.
inline YPolynomial y_substitute_power(const YPolynomial& p, int l) { return p.substitute_power(l); }

}  // namespace symgen
