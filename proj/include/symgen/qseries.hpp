#pragma once

#include <cstddef>
#include <vector>

#include "symgen/ypolynomial.hpp"

namespace symgen {

/// Truncated power series in q with YPolynomial coefficients. The series
/// knows coefficients of q^0 .. q^trunc exactly; everything above is unknown.
class QSeries {
public:
    /// The zero series with truncation order `trunc`.
    explicit QSeries(std::size_t trunc);
    /// Missing coefficients are zero; extra ones are dropped.
    QSeries(std::size_t trunc, std::vector<YPolynomial> coefficients);

    static QSeries one(std::size_t trunc);
    /// c * q^k (zero when k > trunc).
    static QSeries monomial(std::size_t trunc, std::size_t k, const YPolynomial& c);

    std::size_t trunc() const { return coeffs_.size() - 1; }
    const std::vector<YPolynomial>& coefficients() const { return coeffs_; }
    const YPolynomial& operator[](std::size_t k) const { return coeffs_.at(k); }
    /// Coefficient of q^k; throws std::out_of_range when k > trunc instead of guessing.
    const YPolynomial& coefficient(std::size_t k) const;

    QSeries truncated(std::size_t trunc) const;
    /// q -> q^l, keeping the truncation order.
    QSeries substitute_q_power(std::size_t l) const;

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    QSeries& operator*=(const YPolynomial& scalar);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const YPolynomial& s) { return a *= s; }

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<YPolynomial> coeffs_;
};

/// Cauchy product truncated to min(a.trunc, b.trunc).
QSeries series_mul(const QSeries& a, const QSeries& b);
inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }

/// exp(f); the constant term of f must vanish (std::invalid_argument otherwise).
QSeries series_exp(const QSeries& f);
/// log(f); the constant term of f must be 1 (std::invalid_argument otherwise).
QSeries series_log(const QSeries& f);

/// (1 - q)^(-c) to order trunc, for any integer c.
QSeries binomial_power(long c, std::size_t trunc);

}  // namespace symgen
