#include "symgen/genera.hpp"

#include <stdexcept>

#include "symgen/errors.hpp"
#include "symgen/partitions.hpp"

namespace symgen {

namespace {

void require_theory(const HodgeDiamond& h, Theory expected, std::string_view op) {
    if (h.theory() != expected) {
        throw std::invalid_argument(std::string(op) + ": diamond has theory '" + to_string(h.theory()) +
                                    "', expected '" + to_string(expected) + "'");
    }
}

}  // namespace

QSeries euler_sym_series(long chi, std::size_t max_n) { return binomial_power(chi, max_n); }

QSeries euler_orb_series(long chi, std::size_t max_n) {
    const QSeries base = binomial_power(chi, max_n);
    QSeries product = QSeries::one(max_n);
    for (std::size_t l = 1; l <= max_n; ++l) product = product * base.substitute_q_power(l);
    return product;
}

Rational euler_orb_bruteforce(long chi, int n) {
    if (n < 0 || n > 6) {
        throw GuardViolation("euler_orb_bruteforce: n = " + std::to_string(n) + " outside 0..6");
    }
    mpz_class total = 0;
    for (const auto& [g, h] : commuting_pairs(n)) {
        mpz_class term;
        mpz_pow_ui(term.get_mpz_t(), mpz_class(chi).get_mpz_t(),
                   static_cast<unsigned long>(joint_orbit_count(g, h)));
        total += term;
    }
    mpz_class order;
    mpz_fac_ui(order.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(total, order));
}

Rational euler_orb_class_sum(long chi, int n) {
    if (n == 0) return Rational(1);
    const QSeries sym = euler_sym_series(chi, static_cast<std::size_t>(n));
    Rational sum;
    for (const auto& t : partitions_of(n)) {
        Rational term(1);
        for (int l = 1; l <= n; ++l) term *= sym[static_cast<std::size_t>(t.count(l))].constant_term();
        sum += term;
    }
    return sum;
}

QSeries sym_series_from_genus(const YPolynomial& genus, std::size_t max_n) {
    QSeries f(max_n);
    for (std::size_t l = 1; l <= max_n; ++l) {
        f += QSeries::monomial(max_n, l, genus.substitute_power(static_cast<int>(l)) /
                                             Rational(static_cast<long>(l)));
    }
    return series_exp(f);
}

QSeries orb_series_from_genus(const YPolynomial& genus, int dim, std::size_t max_n) {
    // sum_l (q^l / l) P(y^l) sum_{m >= 0} (u^d q)^{lm}
    QSeries f(max_n);
    for (std::size_t l = 1; l <= max_n; ++l) {
        const YPolynomial base = genus.substitute_power(static_cast<int>(l)) / Rational(static_cast<long>(l));
        for (std::size_t m = 0; l * (m + 1) <= max_n; ++m) {
            const int quanta = dim * static_cast<int>(l * m);
            f += QSeries::monomial(max_n, l * (m + 1), base * YPolynomial::u_monomial(1, quanta));
        }
    }
    return series_exp(f);
}

WeightConvention parse_weight_convention(std::string_view name) {
    if (name == "positive-y") return WeightConvention::positive_y;
    if (name == "minus-y") return WeightConvention::minus_y;
    throw std::invalid_argument("unknown weight convention '" + std::string(name) + "'");
}

std::string to_string(WeightConvention c) {
    return c == WeightConvention::positive_y ? "positive-y" : "minus-y";
}

YPolynomial FermionicShift::weight(WeightConvention convention) const {
    if (convention == WeightConvention::positive_y) return YPolynomial::u_monomial(1, u_quanta);
    if (!is_integral()) {
        throw std::domain_error("(-y)^F is not a Laurent polynomial in y^{1/2} for F = " +
                                std::to_string(u_quanta) + "/2");
    }
    const int f = u_quanta / 2;
    return YPolynomial::u_monomial(f % 2 == 0 ? 1 : -1, u_quanta);
}

YPolynomial delocalized_from_genus(const YPolynomial& genus, int dim, int n,
                                   WeightConvention convention) {
    if (n < 0 || n > 12) {
        throw GuardViolation("delocalized class sum: n = " + std::to_string(n) + " outside 0..12");
    }
    if (n == 0) return YPolynomial(1);
    const QSeries sym = sym_series_from_genus(genus, static_cast<std::size_t>(n));
    YPolynomial sum;
    for (const auto& t : partitions_of(n)) {
        YPolynomial term(1);
        for (int l = 1; l <= n; ++l) {
            const int cycles = t.count(l);
            if (cycles == 0) continue;
            term *= FermionicShift::for_cycles(dim, l, cycles).weight(convention) *
                    sym[static_cast<std::size_t>(cycles)];
        }
        sum += term;
    }
    return sum;
}

QSeries chiy_sym_series(const HodgeDiamond& h, std::size_t max_n) {
    require_theory(h, Theory::hodge, "chiy_sym_series");
    return sym_series_from_genus(chi_minus_y(h), max_n);
}

QSeries chiy_orb_series(const HodgeDiamond& h, std::size_t max_n) {
    require_theory(h, Theory::hodge, "chiy_orb_series");
    return orb_series_from_genus(chi_minus_y(h), h.dim(), max_n);
}

YPolynomial chiy_orb_delocalized(const HodgeDiamond& h, int n, WeightConvention convention) {
    require_theory(h, Theory::hodge, "chiy_orb_delocalized");
    return delocalized_from_genus(chi_minus_y(h), h.dim(), n, convention);
}

QSeries chihat_sym_series(const HodgeDiamond& h, std::size_t max_n) {
    require_theory(h, Theory::b_side, "chihat_sym_series");
    return sym_series_from_genus(chi_minus_y(h), max_n);
}

QSeries chihat_orb_series(const HodgeDiamond& h, std::size_t max_n) {
    require_theory(h, Theory::b_side, "chihat_orb_series");
    return orb_series_from_genus(chi_minus_y(h), h.dim(), max_n);
}

YPolynomial chihat_orb_delocalized(const HodgeDiamond& h, int n, WeightConvention convention) {
    require_theory(h, Theory::b_side, "chihat_orb_delocalized");
    return delocalized_from_genus(chi_minus_y(h), h.dim(), n, convention);
}

GenusFlavor parse_genus_flavor(std::string_view name) {
    if (name == "euler-sym") return GenusFlavor::euler_sym;
    if (name == "euler-orb") return GenusFlavor::euler_orb;
    if (name == "chiy-sym") return GenusFlavor::chiy_sym;
    if (name == "chiy-orb") return GenusFlavor::chiy_orb;
    if (name == "chihat-sym") return GenusFlavor::chihat_sym;
    if (name == "chihat-orb") return GenusFlavor::chihat_orb;
    throw std::invalid_argument("unknown series flavor '" + std::string(name) + "'");
}

std::string to_string(GenusFlavor f) {
    switch (f) {
        case GenusFlavor::euler_sym: return "euler-sym";
        case GenusFlavor::euler_orb: return "euler-orb";
        case GenusFlavor::chiy_sym: return "chiy-sym";
        case GenusFlavor::chiy_orb: return "chiy-orb";
        case GenusFlavor::chihat_sym: return "chihat-sym";
        case GenusFlavor::chihat_orb: return "chihat-orb";
    }
    return {};
}

QSeries compute(const GenusSeriesRequest& request) {
    const auto& h = request.diamond;
    switch (request.flavor) {
        case GenusFlavor::euler_sym: return euler_sym_series(euler_number(h), request.max_n);
        case GenusFlavor::euler_orb: return euler_orb_series(euler_number(h), request.max_n);
        case GenusFlavor::chiy_sym: return chiy_sym_series(h, request.max_n);
        case GenusFlavor::chiy_orb: return chiy_orb_series(h, request.max_n);
        case GenusFlavor::chihat_sym: return chihat_sym_series(h, request.max_n);
        case GenusFlavor::chihat_orb: return chihat_orb_series(h, request.max_n);
    }
    throw std::logic_error("unreachable genus flavor");
}

}  // namespace symgen
