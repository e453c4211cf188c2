#include "symgen/hodge.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "symgen/limits.hpp"

namespace symgen {

std::string to_string(Theory t) { return t == Theory::hodge ? "hodge" : "b-side"; }

HodgeDiamond::HodgeDiamond(int d, std::vector<std::vector<long>> h, Theory theory)
    : d_(d), h_(std::move(h)), theory_(theory) {
    if (d < 0) throw std::invalid_argument("HodgeDiamond: negative dimension");
    const auto size = static_cast<std::size_t>(d) + 1;
    if (h_.size() != size) {
        throw std::invalid_argument("HodgeDiamond: expected " + std::to_string(size) + " rows, got " +
                                    std::to_string(h_.size()));
    }
    for (std::size_t p = 0; p < size; ++p) {
        if (h_[p].size() != size) {
            throw std::invalid_argument("HodgeDiamond: row " + std::to_string(p) + " has " +
                                        std::to_string(h_[p].size()) + " entries, expected " +
                                        std::to_string(size));
        }
        for (long v : h_[p]) {
            if (v < 0) throw std::invalid_argument("HodgeDiamond: negative Hodge number");
        }
    }
}

long HodgeDiamond::total_dimension() const {
    long sum = 0;
    for (const auto& row : h_) {
        for (long v : row) sum += v;
    }
    return sum;
}

bool HodgeDiamond::has_hodge_symmetry() const {
    for (int p = 0; p <= d_; ++p) {
        for (int q = 0; q <= d_; ++q) {
            if (at(p, q) != at(q, p)) return false;
        }
    }
    return true;
}

bool HodgeDiamond::has_serre_symmetry() const {
    for (int p = 0; p <= d_; ++p) {
        for (int q = 0; q <= d_; ++q) {
            if (at(p, q) != at(d_ - p, d_ - q)) return false;
        }
    }
    return true;
}

std::vector<std::string> HodgeDiamond::symmetry_warnings() const {
    std::vector<std::string> out;
    // Polyvector-field numbers h^{-p,q} satisfy neither symmetry in general.
    if (theory_ == Theory::b_side) return out;
    if (!has_hodge_symmetry()) {
        out.emplace_back("diamond violates Hodge symmetry h^{p,q} = h^{q,p}");
    }
    if (!has_serre_symmetry()) {
        out.emplace_back("diamond violates Serre symmetry h^{p,q} = h^{d-p,d-q}");
    }
    return out;
}

HodgeDiamond HodgeDiamond::point() { return HodgeDiamond(0, {{1}}); }
HodgeDiamond HodgeDiamond::projective_line() { return HodgeDiamond(1, {{1, 0}, {0, 1}}); }
HodgeDiamond HodgeDiamond::projective_plane() {
    return HodgeDiamond(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}
HodgeDiamond HodgeDiamond::elliptic_curve() { return HodgeDiamond(1, {{1, 1}, {1, 1}}); }
HodgeDiamond HodgeDiamond::k3() { return HodgeDiamond(2, {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}); }

BigradedSuperSpace BigradedSuperSpace::from_diamond(const HodgeDiamond& h) {
    BigradedSuperSpace v;
    for (int p = 0; p <= h.dim(); ++p) {
        for (int q = 0; q <= h.dim(); ++q) {
            if (h.at(p, q) != 0) v.dims[{p, q}] = h.at(p, q);
        }
    }
    return v;
}

long BigradedSuperSpace::total_dimension() const {
    long sum = 0;
    for (const auto& [b, n] : dims) sum += n;
    return sum;
}

BidegreePolynomial BidegreePolynomial::constant(const Rational& c) { return monomial(c, 0, 0); }

BidegreePolynomial BidegreePolynomial::monomial(const Rational& c, int p, int q) {
    BidegreePolynomial out;
    out.add_term({p, q}, c);
    return out;
}

Rational BidegreePolynomial::coefficient(int p, int q) const {
    const auto it = terms_.find({p, q});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BidegreePolynomial::add_term(const Bidegree& b, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BidegreePolynomial& BidegreePolynomial::operator+=(const BidegreePolynomial& rhs) {
    for (const auto& [b, c] : rhs.terms_) add_term(b, c);
    return *this;
}

BidegreePolynomial& BidegreePolynomial::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, c] : terms_) c *= scalar;
    return *this;
}

BidegreePolynomial operator*(const BidegreePolynomial& a, const BidegreePolynomial& b) {
    BidegreePolynomial out;
    for (const auto& [ba, ca] : a.terms_) {
        for (const auto& [bb, cb] : b.terms_) {
            out.add_term({ba.first + bb.first, ba.second + bb.second}, ca * cb);
        }
    }
    return out;
}

std::string BidegreePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*s^" << b.first << "*t^" << b.second;
    }
    return os.str();
}

namespace {

int sign_of_parity(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

YPolynomial chi_minus_y(const BigradedSuperSpace& v) {
    YPolynomial out;
    for (const auto& [b, n] : v.dims) {
        const auto [p, q] = b;
        out += YPolynomial::y_monomial(Rational(sign_of_parity(p + q) * n), p);
    }
    return out;
}

YPolynomial chi_minus_y(const HodgeDiamond& h) { return chi_minus_y(BigradedSuperSpace::from_diamond(h)); }

long euler_number(const BigradedSuperSpace& v) {
    long chi = 0;
    for (const auto& [b, n] : v.dims) chi += sign_of_parity(b.first + b.second) * n;
    return chi;
}

long euler_number(const HodgeDiamond& h) { return euler_number(BigradedSuperSpace::from_diamond(h)); }

BigradedSuperSpace super_symmetric_power(const BigradedSuperSpace& v, int n) {
    if (n < 0) throw std::invalid_argument("super_symmetric_power: negative power");
    const auto total = static_cast<std::uint64_t>(v.total_dimension());
    check_enumeration("super_symmetric_power", saturating_pow(total, static_cast<unsigned>(n)),
                      1'000'000);
    struct BasisVector {
        int p, q;
        bool odd;
    };
    std::vector<BasisVector> basis;
    for (const auto& [b, count] : v.dims) {
        for (long i = 0; i < count; ++i) basis.push_back({b.first, b.second, (b.first + b.second) % 2 != 0});
    }
    BigradedSuperSpace out;
    // Monomials v_{i_1} ... v_{i_n} with i_1 <= ... <= i_n, strict on odd vectors.
    std::function<void(std::size_t, int, int, int)> extend = [&](std::size_t start, int left, int p, int q) {
        if (left == 0) {
            ++out.dims[{p, q}];
            return;
        }
        for (std::size_t i = start; i < basis.size(); ++i) {
            const auto& b = basis[i];
            extend(b.odd ? i + 1 : i, left - 1, p + b.p, q + b.q);
        }
    };
    extend(0, n, 0, 0);
    return out;
}

BidegreePolynomial graded_dimension(const BigradedSuperSpace& v) {
    BidegreePolynomial out;
    for (const auto& [b, n] : v.dims) out += BidegreePolynomial::monomial(Rational(n), b.first, b.second);
    return out;
}

BidegreePolynomial molien_trace(const BigradedSuperSpace& v, const CycleType& t) {
    BidegreePolynomial trace = BidegreePolynomial::constant(1);
    for (int l = 1; l <= t.n(); ++l) {
        const int cycles = t.count(l);
        if (cycles == 0) continue;
        BidegreePolynomial factor;
        for (const auto& [b, n] : v.dims) {
            const auto [p, q] = b;
            factor += BidegreePolynomial::monomial(Rational(sign_of_parity((l - 1) * (p + q)) * n),
                                                   l * p, l * q);
        }
        for (int i = 0; i < cycles; ++i) trace = trace * factor;
    }
    return trace;
}

BidegreePolynomial molien_trace(const HodgeDiamond& h, const CycleType& t) {
    return molien_trace(BigradedSuperSpace::from_diamond(h), t);
}

BidegreePolynomial molien_average(const BigradedSuperSpace& v, int n) {
    if (n == 0) return BidegreePolynomial::constant(1);
    BidegreePolynomial sum;
    for (const auto& t : partitions_of(n)) {
        BidegreePolynomial term = molien_trace(v, t);
        term *= Rational(mpq_class(mpz_class(1), centralizer_order(t)));
        sum += term;
    }
    return sum;
}

}  // namespace symgen
