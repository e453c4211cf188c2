#include "symgen/mvseries.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symgen {

namespace uni {

UniSeries exp_series(int trunc) { return exp_scaled(Rational(1), trunc); }

UniSeries exp_scaled(const Rational& s, int trunc) {
    UniSeries out(static_cast<std::size_t>(trunc) + 1);
    Rational term(1);
    for (int k = 0; k <= trunc; ++k) {
        if (k > 0) term = term * s / Rational(k);
        out[static_cast<std::size_t>(k)] = term;
    }
    return out;
}

UniSeries inverse(const UniSeries& f) {
    if (f.empty() || f[0].is_zero()) throw std::domain_error("uni::inverse: zero constant term");
    UniSeries g(f.size());
    g[0] = Rational(1) / f[0];
    for (std::size_t k = 1; k < f.size(); ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) acc += f[j] * g[k - j];
        g[k] = -acc / f[0];
    }
    return g;
}

// (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!, inverted.
UniSeries todd_series(int trunc) {
    UniSeries denom(static_cast<std::size_t>(trunc) + 1);
    for (int k = 0; k <= trunc; ++k) {
        denom[static_cast<std::size_t>(k)] =
            Rational(k % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(k + 1));
    }
    return inverse(denom);
}

}  // namespace uni

MVSeries MVSeries::constant(MVShape shape, const Rational& c) {
    MVSeries s(shape);
    s.add_term(Exponents(static_cast<std::size_t>(shape.nvars), 0), c);
    return s;
}

MVSeries MVSeries::variable(MVShape shape, int index) {
    if (index < 0 || index >= shape.nvars) throw std::out_of_range("MVSeries: variable index");
    MVSeries s(shape);
    Exponents e(static_cast<std::size_t>(shape.nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    s.add_term(e, Rational(1));
    return s;
}

MVSeries MVSeries::linear_form(MVShape shape, const std::vector<Rational>& coeffs) {
    if (static_cast<int>(coeffs.size()) != shape.nvars) {
        throw std::invalid_argument("MVSeries: linear form has wrong number of coefficients");
    }
    MVSeries s(shape);
    for (int i = 0; i < shape.nvars; ++i) {
        Exponents e(static_cast<std::size_t>(shape.nvars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        s.add_term(e, coeffs[static_cast<std::size_t>(i)]);
    }
    return s;
}

Rational MVSeries::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MVSeries::constant_term() const {
    return coefficient(Exponents(static_cast<std::size_t>(shape_.nvars), 0));
}

void MVSeries::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(e.size()) != shape_.nvars) throw std::invalid_argument("MVSeries: exponent arity");
    int degree = 0;
    for (int v : e) {
        if (v < 0) throw std::invalid_argument("MVSeries: negative exponent");
        if (shape_.square_free && v > 1) return;
        degree += v;
    }
    if (degree > shape_.trunc) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MVSeries& MVSeries::operator+=(const MVSeries& rhs) {
    if (!(rhs.shape_ == shape_)) throw std::invalid_argument("MVSeries: shape mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MVSeries& MVSeries::operator-=(const MVSeries& rhs) {
    if (!(rhs.shape_ == shape_)) throw std::invalid_argument("MVSeries: shape mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MVSeries& MVSeries::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MVSeries operator*(const MVSeries& a, const MVSeries& b) {
    if (!(a.shape_ == b.shape_)) throw std::invalid_argument("MVSeries: shape mismatch");
    MVSeries out(a.shape_);
    MVSeries::Exponents e(static_cast<std::size_t>(a.shape_.nvars));
    for (const auto& [ea, ca] : a.terms_) {
        const int da = std::accumulate(ea.begin(), ea.end(), 0);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + std::accumulate(eb.begin(), eb.end(), 0) > a.shape_.trunc) continue;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MVSeries MVSeries::pow(unsigned k) const {
    MVSeries result = constant(shape_, 1);
    for (unsigned i = 0; i < k; ++i) result = result * *this;
    return result;
}

// 1/f = (1/c) sum_k (1 - f/c)^k; the sum terminates because 1 - f/c has no
// constant term and the ring is truncated.
MVSeries MVSeries::inverse() const {
    const Rational c = constant_term();
    if (c.is_zero()) throw std::domain_error("MVSeries::inverse: zero constant term");
    const MVSeries nilpotent = constant(shape_, 1) - *this * (Rational(1) / c);
    MVSeries sum = constant(shape_, 1);
    MVSeries power = constant(shape_, 1);
    for (int k = 1; k <= shape_.trunc; ++k) {
        power = power * nilpotent;
        if (power.is_zero()) break;
        sum += power;
    }
    return sum * (Rational(1) / c);
}

MVSeries MVSeries::homogeneous_component(int k) const {
    MVSeries out(shape_);
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0) == k) out.add_term(e, c);
    }
    return out;
}

std::string MVSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i + 1;
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

MVSeries compose(const UniSeries& f, const MVSeries& arg) {
    if (!arg.constant_term().is_zero()) {
        throw std::invalid_argument("compose: argument must have zero constant term");
    }
    MVSeries out(arg.shape());
    MVSeries power = MVSeries::constant(arg.shape(), 1);
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k > 0) power = power * arg;
        if (power.is_zero()) break;
        if (!f[k].is_zero()) out += power * f[k];
    }
    return out;
}

}  // namespace symgen
