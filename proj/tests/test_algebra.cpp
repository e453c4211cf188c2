#include <doctest.h>

#include <random>

#include "symgen/qseries.hpp"

using namespace symgen;

namespace {

QSeries series_of(std::size_t trunc, std::initializer_list<long> coeffs) {
    std::vector<YPolynomial> c;
    for (long v : coeffs) c.emplace_back(v);
    return QSeries(trunc, std::move(c));
}

const YPolynomial y = YPolynomial::y();
const YPolynomial u = YPolynomial::u();

// Independent oracle for (1-q)^{-c}: C(n+c-1, n) as a generalized binomial.
Rational binomial_oracle(long c, unsigned n) { return binomial(c + static_cast<long>(n) - 1, n); }

QSeries random_series(std::mt19937_64& rng, std::size_t trunc) {
    std::vector<YPolynomial> c;
    for (std::size_t k = 0; k <= trunc; ++k) {
        YPolynomial p;
        for (int e = -2; e <= 3; ++e) {
            const long v = static_cast<long>(rng() % 7) - 3;
            if (rng() % 2 == 0) p += YPolynomial::u_monomial(Rational(v, 1 + static_cast<long>(rng() % 3)), e);
        }
        c.push_back(p);
    }
    return QSeries(trunc, std::move(c));
}

}  // namespace

TEST_CASE("Rational stays canonical") {
    const Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational(3, 4).to_fraction_string() == "3/4");
    CHECK(Rational(3).to_fraction_string() == "3/1");
    CHECK(binomial(-5, 2) == Rational(15));
}

TEST_CASE("YPolynomial stores no zeros and scales exponents") {
    YPolynomial p = 1 + y;
    p -= y;
    CHECK(p == YPolynomial(1));
    CHECK(p.terms().size() == 1);
    CHECK((y * u).coefficient(3) == Rational(1));
    CHECK(y_substitute_power(1 + y, 2) == 1 + y.pow(2));
    CHECK(y_substitute_power(1 + u, 3) == 1 + u.pow(3));
    CHECK(y_substitute_power(1 - 3 * y, 1) == 1 - 3 * y);
    CHECK_THROWS(y_substitute_power(y, 0));
    CHECK((1 + u + y).to_string() == "1 + y^1/2 + y");
    CHECK((1 - 3 * y).to_string() == "1 - 3*y");
    CHECK((-(Rational(1, 2) * u.pow(3))).to_string() == "-1/2*y^3/2");
    CHECK(YPolynomial().to_string() == "0");
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_series(rng, 0)[0];
        const auto b = random_series(rng, 0)[0];
        for (int l = 1; l <= 4; ++l) {
            CHECK(y_substitute_power(a * b, l) == y_substitute_power(a, l) * y_substitute_power(b, l));
            CHECK(y_substitute_power(a + b, l) == y_substitute_power(a, l) + y_substitute_power(b, l));
        }
    }
}

TEST_CASE("series_mul") {
    CHECK(series_mul(series_of(2, {1, 1}), series_of(2, {1, 1})) == series_of(2, {1, 2, 1}));
    const QSeries one_plus_yq(3, {YPolynomial(1), y});
    CHECK(series_mul(one_plus_yq, QSeries::one(3)) == one_plus_yq);
    // Geometric series times (1 - q) telescopes to 1.
    CHECK(series_mul(series_of(3, {1, 1, 1, 1}), series_of(3, {1, -1})) == QSeries::one(3));
    // Truncation is the minimum of the operands.
    CHECK(series_mul(series_of(5, {1, 1}), series_of(2, {1, 1})).trunc() == 2);
}

TEST_CASE("ring laws at fixed truncation") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 4);
        const auto b = random_series(rng, 4);
        const auto c = random_series(rng, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("series_exp") {
    CHECK(series_exp(QSeries(4)) == QSeries::one(4));
    CHECK(series_exp(series_of(2, {0, 2, 1})) == series_of(2, {1, 2, 3}));
    QSeries f(4);
    for (std::size_t l = 1; l <= 4; ++l) f += QSeries::monomial(4, l, YPolynomial(Rational(2, static_cast<long>(l))));
    CHECK(series_exp(f) == series_of(4, {1, 2, 3, 4, 5}));
    CHECK_THROWS_AS(series_exp(series_of(2, {1, 1})), std::invalid_argument);
    try {
        (void)series_exp(series_of(2, {3}));
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("series_log") {
    CHECK(series_log(QSeries::one(3)) == QSeries(3));
    const QSeries g(4, {YPolynomial(), YPolynomial(1), y});
    CHECK(series_log(series_exp(g)) == g);
    // Mercator: log(1/(1-q)) = sum q^k / k.
    const QSeries expected(4, {YPolynomial(), YPolynomial(1), YPolynomial(Rational(1, 2)),
                               YPolynomial(Rational(1, 3)), YPolynomial(Rational(1, 4))});
    CHECK(series_log(series_of(4, {1, 1, 1, 1, 1})) == expected);
    CHECK(series_exp(expected) == series_of(4, {1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(series_log(series_of(2, {2})), std::invalid_argument);
}

TEST_CASE("log inverts exp at every truncation up to 8") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 0; n <= 8; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            auto f = random_series(rng, n);
            f = f - QSeries::monomial(n, 0, f[0]);
            CHECK(series_log(series_exp(f)) == f);
        }
    }
}

TEST_CASE("binomial_power") {
    CHECK(binomial_power(2, 4) == series_of(4, {1, 2, 3, 4, 5}));
    CHECK(binomial_power(0, 3) == series_of(3, {1}));
    CHECK(binomial_power(24, 1) == series_of(1, {1, 24}));
    for (long c = -6; c <= 6; ++c) {
        const auto s = binomial_power(c, 8);
        for (unsigned n = 0; n <= 8; ++n) CHECK(s[n] == YPolynomial(binomial_oracle(c, n)));
    }
}

TEST_CASE("binomial_power equals the exponential form") {
    for (long c = -6; c <= 6; ++c) {
        for (std::size_t n = 0; n <= 8; ++n) {
            QSeries f(n);
            for (std::size_t l = 1; l <= n; ++l) {
                f += QSeries::monomial(n, l, YPolynomial(Rational(c, static_cast<long>(l))));
            }
            CHECK(binomial_power(c, n) == series_exp(f));
        }
    }
}

TEST_CASE("coefficient access refuses to guess beyond the truncation") {
    const auto s = binomial_power(2, 3);
    CHECK(s.coefficient(3) == YPolynomial(4));
    CHECK_THROWS_AS(s.coefficient(4), std::out_of_range);
    CHECK(s.substitute_q_power(2) == series_of(3, {1, 0, 2}));
}
