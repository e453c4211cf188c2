#include "symgen/ypolynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace symgen {

YPolynomial::YPolynomial(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(0, constant);
}

YPolynomial YPolynomial::u_monomial(const Rational& coefficient, int u_exponent) {
    YPolynomial p;
    p.add_term(u_exponent, coefficient);
    return p;
}

Rational YPolynomial::coefficient(int u_exponent) const {
    const auto it = terms_.find(u_exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool YPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool YPolynomial::has_half_integer_powers() const {
    for (const auto& [e, c] : terms_) {
        if (e % 2 != 0) return true;
    }
    return false;
}

void YPolynomial::add_term(int u_exponent, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(u_exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
    YPolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
}

YPolynomial& YPolynomial::operator*=(const YPolynomial& rhs) { return *this = *this * rhs; }

YPolynomial& YPolynomial::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

YPolynomial& YPolynomial::operator/=(const Rational& scalar) {
    for (auto& [e, c] : terms_) c /= scalar;
    return *this;
}

YPolynomial YPolynomial::operator-() const {
    YPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

YPolynomial YPolynomial::pow(unsigned exponent) const {
    YPolynomial result(1);
    YPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

YPolynomial YPolynomial::substitute_power(int l) const {
    if (l < 1) throw std::invalid_argument("substitute_power: l must be >= 1");
    YPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e * l, c);
    return out;
}

Rational YPolynomial::evaluate_at_one() const {
    Rational sum;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

YPolynomial YPolynomial::reflect(int y_shift) const {
    YPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(2 * y_shift - e, c);
    return out;
}

namespace {

std::string power_string(int u_exponent) {
    if (u_exponent % 2 == 0) {
        const int k = u_exponent / 2;
        return k == 1 ? "y" : "y^" + std::to_string(k);
    }
    return "y^" + std::to_string(u_exponent) + "/2";
}

}  // namespace

std::string YPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational magnitude = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << magnitude;
        } else if (magnitude.is_one()) {
            os << power_string(e);
        } else {
            os << magnitude << '*' << power_string(e);
        }
    }
    return os.str();
}

}  // namespace symgen
