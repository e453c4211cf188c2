#include "symgen/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace symgen {

QSeries::QSeries(std::size_t trunc) : coeffs_(trunc + 1) {}

QSeries::QSeries(std::size_t trunc, std::vector<YPolynomial> coefficients)
    : coeffs_(std::move(coefficients)) {
    coeffs_.resize(trunc + 1);
}

QSeries QSeries::one(std::size_t trunc) { return monomial(trunc, 0, YPolynomial(1)); }

QSeries QSeries::monomial(std::size_t trunc, std::size_t k, const YPolynomial& c) {
    QSeries s(trunc);
    if (k <= trunc) s.coeffs_[k] = c;
    return s;
}

const YPolynomial& QSeries::coefficient(std::size_t k) const {
    if (k > trunc()) {
        throw std::out_of_range("QSeries: coefficient of q^" + std::to_string(k) +
                                " requested from a series truncated at q^" +
                                std::to_string(trunc()));
    }
    return coeffs_[k];
}

QSeries QSeries::truncated(std::size_t trunc) const {
    if (trunc > this->trunc()) {
        throw std::invalid_argument("QSeries: cannot extend truncation order");
    }
    return QSeries(trunc, std::vector<YPolynomial>(coeffs_.begin(), coeffs_.begin() + trunc + 1));
}

QSeries QSeries::substitute_q_power(std::size_t l) const {
    if (l == 0) throw std::invalid_argument("QSeries: q-power substitution needs l >= 1");
    QSeries out(trunc());
    for (std::size_t k = 0; k * l <= trunc(); ++k) out.coeffs_[k * l] = coeffs_[k];
    return out;
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

QSeries& QSeries::operator*=(const YPolynomial& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.trunc(), b.trunc());
    std::vector<YPolynomial> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
        }
    }
    return QSeries(n, std::move(out));
}

// g = exp(f) satisfies g' = f' g, i.e. k g_k = sum_{j=1..k} j f_j g_{k-j}.
QSeries series_exp(const QSeries& f) {
    if (!f[0].is_zero()) {
        throw std::invalid_argument("series_exp: constant term must be zero, got " +
                                    f[0].to_string());
    }
    const std::size_t n = f.trunc();
    std::vector<YPolynomial> g(n + 1);
    g[0] = YPolynomial(1);
    for (std::size_t k = 1; k <= n; ++k) {
        YPolynomial acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (f[j].is_zero() || g[k - j].is_zero()) continue;
            acc += (f[j] * g[k - j]) * Rational(static_cast<long>(j));
        }
        g[k] = acc / Rational(static_cast<long>(k));
    }
    return QSeries(n, std::move(g));
}

// f = exp(g) with f_0 = 1 gives k g_k = k f_k - sum_{j=1..k-1} j g_j f_{k-j}.
QSeries series_log(const QSeries& f) {
    if (!(f[0] == YPolynomial(1))) {
        throw std::invalid_argument("series_log: constant term must be 1, got " + f[0].to_string());
    }
    const std::size_t n = f.trunc();
    std::vector<YPolynomial> g(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        YPolynomial acc = f[k] * Rational(static_cast<long>(k));
        for (std::size_t j = 1; j < k; ++j) {
            if (g[j].is_zero() || f[k - j].is_zero()) continue;
            acc -= (g[j] * f[k - j]) * Rational(static_cast<long>(j));
        }
        g[k] = acc / Rational(static_cast<long>(k));
    }
    return QSeries(n, std::move(g));
}

// Coefficient ratio a_k / a_{k-1} = (c + k - 1) / k.
QSeries binomial_power(long c, std::size_t trunc) {
    std::vector<YPolynomial> out(trunc + 1);
    Rational a(1);
    out[0] = YPolynomial(a);
    for (std::size_t k = 1; k <= trunc; ++k) {
        const long kk = static_cast<long>(k);
        a *= Rational(c + kk - 1, kk);
        out[k] = YPolynomial(a);
    }
    return QSeries(trunc, std::move(out));
}

}  // namespace symgen
