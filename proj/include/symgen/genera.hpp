#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "symgen/hodge.hpp"
#include "symgen/qseries.hpp"

namespace symgen {

// Generating functions over n of genera of symmetric products X^(n) ("sym")
// and of the orbifold theory of X^n / S_n ("orb"), from Hodge numbers of X.

/// sum chi(X^(n)) q^n = (1 - q)^(-chi).
QSeries euler_sym_series(long chi, std::size_t max_n);

/// sum chi(X^n, S_n) q^n = prod_{l >= 1} (1 - q^l)^(-chi).
QSeries euler_orb_series(long chi, std::size_t max_n);

/// Orbifold Euler number by brute force: (1/n!) sum over commuting pairs (g,h)
/// of chi^{#orbits of <g,h> on {1..n}}. Requires n <= 6.
Rational euler_orb_bruteforce(long chi, int n);
inline Rational euler_orb_bruteforce(const HodgeDiamond& h, int n) {
    return euler_orb_bruteforce(euler_number(h), n);
}

/// Orbifold Euler number as a sum over conjugacy classes of the Euler numbers
/// of the fixed-locus quotients prod_l X^(N_l).
Rational euler_orb_class_sum(long chi, int n);

/// exp(sum_l chi_{-y^l}(X) q^l / l). Requires the hodge theory tag.
QSeries chiy_sym_series(const HodgeDiamond& h, std::size_t max_n);

/// exp(sum_l (q^l/l) chi_{-y^l}(X) / (1 - (y^{d/2} q)^l)). Requires the hodge tag.
QSeries chiy_orb_series(const HodgeDiamond& h, std::size_t max_n);

/// How the twisted-sector shift F of a class enters the class sum.
enum class WeightConvention {
    positive_y,  // y^F; agrees with the orbifold product formula
    minus_y,     // (-y)^F; only defined when every F is an integer
};

WeightConvention parse_weight_convention(std::string_view name);
std::string to_string(WeightConvention c);

/// Fermionic shift of N disjoint l-cycles on X^{ln}, stored in quanta of
/// u = y^{1/2}: F = N (l - 1) d / 2, i.e. N (l - 1) d quanta.
struct FermionicShift {
    int u_quanta = 0;

    static FermionicShift for_cycles(int dim, int cycle_length, int cycle_count) {
        return {cycle_count * (cycle_length - 1) * dim};
    }
    bool is_integral() const { return u_quanta % 2 == 0; }
    /// y^F or (-y)^F; the latter throws std::domain_error for half-integral F.
    YPolynomial weight(WeightConvention convention) const;
};

/// Delocalized class sum: sum over cycle types of prod_l weight(F_l) *
/// chi_{-y}(X^(N_l)), using the symmetric-product genera for each factor.
YPolynomial chiy_orb_delocalized(const HodgeDiamond& h, int n,
                                 WeightConvention convention = WeightConvention::positive_y);

/// b-side analogues; the diamond must carry the b-side tag.
QSeries chihat_sym_series(const HodgeDiamond& h_bside, std::size_t max_n);
QSeries chihat_orb_series(const HodgeDiamond& h_bside, std::size_t max_n);
YPolynomial chihat_orb_delocalized(const HodgeDiamond& h_bside, int n,
                                   WeightConvention convention = WeightConvention::positive_y);

// Pipelines shared by the chi_y and b-side flavors, parameterized by the
// genus polynomial P of X (a polynomial in y).
QSeries sym_series_from_genus(const YPolynomial& genus, std::size_t max_n);
QSeries orb_series_from_genus(const YPolynomial& genus, int dim, std::size_t max_n);
YPolynomial delocalized_from_genus(const YPolynomial& genus, int dim, int n,
                                   WeightConvention convention);

enum class GenusFlavor { euler_sym, euler_orb, chiy_sym, chiy_orb, chihat_sym, chihat_orb };

GenusFlavor parse_genus_flavor(std::string_view name);
std::string to_string(GenusFlavor f);

struct GenusSeriesRequest {
    HodgeDiamond diamond;
    std::size_t max_n = 0;
    GenusFlavor flavor = GenusFlavor::chiy_sym;
};

QSeries compute(const GenusSeriesRequest& request);

}  // namespace symgen
