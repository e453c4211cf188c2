#pragma once

#include <map>
#include <string>
#include <vector>

#include "symgen/rational.hpp"

namespace symgen {

/// Ambient ring of an MVSeries: polynomial ring in `nvars` variables modulo
/// total degree > trunc, and additionally modulo x_i^2 when square_free.
struct MVShape {
    int nvars = 0;
    int trunc = 0;
    bool square_free = false;
    friend bool operator==(const MVShape&, const MVShape&) = default;
};

/// Coefficients a_0, a_1, ... of a univariate power series.
using UniSeries = std::vector<Rational>;

namespace uni {

UniSeries exp_series(int trunc);                   // e^x
UniSeries exp_scaled(const Rational& s, int trunc);  // e^{s x}
UniSeries todd_series(int trunc);                  // x / (1 - e^{-x})
UniSeries inverse(const UniSeries& f);             // 1/f, f[0] != 0

}  // namespace uni

/// Truncated multivariate power series with exact rational coefficients.
class MVSeries {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit MVSeries(MVShape shape) : shape_(shape) {}

    static MVSeries constant(MVShape shape, const Rational& c);
    static MVSeries variable(MVShape shape, int index);
    /// sum_i coeffs[i] * x_i.
    static MVSeries linear_form(MVShape shape, const std::vector<Rational>& coeffs);

    const MVShape& shape() const { return shape_; }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const;
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * x^e, dropping it when outside the ring.
    void add_term(const Exponents& e, const Rational& c);

    MVSeries& operator+=(const MVSeries& rhs);
    MVSeries& operator-=(const MVSeries& rhs);
    MVSeries& operator*=(const Rational& s);
    friend MVSeries operator+(MVSeries a, const MVSeries& b) { return a += b; }
    friend MVSeries operator-(MVSeries a, const MVSeries& b) { return a -= b; }
    friend MVSeries operator*(MVSeries a, const Rational& s) { return a *= s; }
    friend MVSeries operator*(const MVSeries& a, const MVSeries& b);
    friend bool operator==(const MVSeries&, const MVSeries&) = default;

    MVSeries pow(unsigned k) const;
    /// Multiplicative inverse; the constant term must be nonzero.
    MVSeries inverse() const;
    /// Homogeneous part of total degree k.
    MVSeries homogeneous_component(int k) const;

    std::string to_string() const;

private:
    MVShape shape_;
    TermMap terms_;
};

/// sum_k f[k] * arg^k; arg must have zero constant term.
MVSeries compose(const UniSeries& f, const MVSeries& arg);

}  // namespace symgen
