#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symgen/ktheory.hpp"
#include "symgen/mvseries.hpp"
#include "symgen/qseries.hpp"

namespace symgen {

/// Integer combination of the generators of a model cohomology ring.
using LinearForm = std::vector<long>;

/// Toy cohomology rings with integration:
///  - (P^1)^d: generators h_1..h_d with h_i^2 = 0, tangent roots 2h_i,
///    integral = coefficient of h_1...h_d;
///  - P^d: one generator h with h^{d+1} = 0, Todd class (h/(1-e^{-h}))^{d+1}
///    from the Euler sequence, integral = coefficient of h^d.
class ModelManifold {
public:
    enum class Kind { p1_power, projective };

    ModelManifold(Kind kind, int dim);

    static ModelManifold p1_power(int d) { return {Kind::p1_power, d}; }
    static ModelManifold projective(int d) { return {Kind::projective, d}; }
    static ModelManifold point() { return {Kind::projective, 0}; }
    /// "p1^d" or "p^d".
    static ModelManifold parse(std::string_view name);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    int generator_count() const { return kind_ == Kind::p1_power ? dim_ : 1; }
    std::string name() const;

    MVShape shape() const;
    /// Chern roots entering the Todd class, as linear forms.
    std::vector<LinearForm> todd_roots() const;
    /// c_1(O(k)): k * (h_1 + ... + h_d) for (P^1)^d, k * h for P^d.
    LinearForm hyperplane(long k) const;
    MVSeries root(const LinearForm& form, long scale = 1) const;
    /// Coefficient extraction at the top monomial.
    Rational integrate(const MVSeries& s) const;

private:
    Kind kind_;
    int dim_;
};

/// A direct sum of line bundles, each with a first Chern class and a grading degree.
struct BundleSummand {
    LinearForm c1;
    int degree = 0;
};

struct ModelBundle {
    std::vector<BundleSummand> summands;

    static ModelBundle line(const ModelManifold& m, long k, int degree = 0);
    static ModelBundle trivial(const ModelManifold& m, int rank);
    /// O(a_1) x ... x O(a_d) on (P^1)^d.
    static ModelBundle exterior_product(const ModelManifold& m, const std::vector<long>& degrees);
    /// Lambda^* T^*X (sign -1) or Lambda^* TX (sign +1) on (P^1)^d, graded by exterior degree.
    static ModelBundle exterior_algebra(const ModelManifold& m, int sign);
    /// The summands as formal line symbols with ids 1..r and their degrees.
    LineSum line_symbols() const;
};

/// A y-weighted sum of line bundles sum_i w_i * L_i, the image of a KClass.
struct WeightedLine {
    LinearForm c1;
    YPolynomial weight;
};

/// Realizes a KClass over `bundle.line_symbols()` on the model: the monomial
/// L_1^{a_1}...L_r^{a_r} becomes the line with c1 = sum a_i c1(L_i).
std::vector<WeightedLine> realize(const ModelBundle& bundle, const KClass& k);

/// prod_j r_j / (1 - e^{-r_j}) over roots with zero constant term.
MVSeries todd_class(const MVShape& shape, const std::vector<MVSeries>& roots);
/// sum over summands of e^{c_1}.
MVSeries chern_character(const ModelManifold& m, const ModelBundle& e);

/// Polynomial (or truncated series) in t with MVSeries coefficients; entry k is t^k.
using TSeries = std::vector<MVSeries>;

/// prod_j (1 + t e^{r_j}), up to t^{t_order}.
TSeries lambda_t(const MVShape& shape, const std::vector<MVSeries>& roots, int t_order);
/// prod_j 1 / (1 - t e^{r_j}), up to t^{t_order}.
TSeries s_t(const MVShape& shape, const std::vector<MVSeries>& roots, int t_order);
TSeries t_multiply(const TSeries& a, const TSeries& b);
/// Substitutes a number for t.
MVSeries evaluate_t(const TSeries& s, const Rational& t);

struct LocalTerm {
    MVSeries lhs;
    MVSeries rhs;
};

/// Normal-bundle local term of an n-cycle on the diagonal of X^n in Chern
/// roots x_1..x_d: lhs = prod_j sum_{k<n} e^{-k x_j} (the telescoped product of
/// (1 - e^{-x_j} zeta^k) over nontrivial n-th roots of unity), rhs =
/// n^d Todd(x) / Todd(n x). Guards: d <= 4, n <= 6, trunc <= 8.
LocalTerm cyclic_local_term(int d, int n, int trunc);

/// chi(M, E) = integral of ch(E) Todd(M).
Rational rr_number(const ModelManifold& m, const ModelBundle& e);

/// (1/n^d) integral of sum_i w_i e^{c_1(L_i)} Todd(psi^n TM): the fixed-point
/// contribution of an n-cycle once the eigenbundle class is known.
YPolynomial cycle_integral(const ModelManifold& m, const std::vector<WeightedLine>& lines, int n);
/// chi_{sigma_n}(X^n, F^{boxtimes n}) for F = sum_i w_i L_i: cycle_integral of psi^n F.
YPolynomial chi_sigma_weighted(const ModelManifold& m, const std::vector<WeightedLine>& lines, int n);
/// chi_{sigma_n}(X^n, E^{boxtimes n}) = (1/n^d) integral of ch(psi^n E) Todd(psi^n TX).
Rational chi_sigma_n(const ModelManifold& m, const ModelBundle& e, int n);

struct HomogeneityCheck {
    MVSeries scaled;    // degree-d part of F(n x, n y)
    MVSeries expected;  // n^d times degree-d part of F(x, y)
    bool holds() const { return scaled == expected; }
};

/// F(x, y) = sum_i e^{y_i} prod_j x_j / (1 - e^{-x_j}) in free variables
/// x_1..x_d, y_1..y_r; checks that its degree-d component scales by n^d.
HomogeneityCheck lemma_homogeneity(int d, int r, int n);

struct SeriesCheck {
    QSeries computed;     // assembled from cycle data
    QSeries closed_form;  // product formula
    bool agree() const { return computed == closed_form; }
};

/// sum_n chi(X^n/S_n, E^{boxtimes n}/S_n) p^n: exp(sum_l p^l chi_{sigma_l} / l)
/// against (1 - p)^{-chi(X,E)}. N <= 12.
SeriesCheck sym_rr_series(const ModelManifold& m, const ModelBundle& e, std::size_t max_n);

/// sum_n chi(X^n, E^{boxtimes n} | S_n) p^n: prod_{l,m} exp(p^{lm}/m
/// chi_{sigma_m}(phi_{sigma_l}(E^{boxtimes l}))) against prod_l (1 - p^l)^{-chi(X, psi^l E)}.
SeriesCheck orb_rr_series(const ModelManifold& m, const ModelBundle& e, std::size_t max_n);

/// Graded version: the cycle terms use the graded-antisymmetric action on
/// E_{-y}; the closed form is exp(sum_l p^l chi_{-y^l}(X, E) / l).
SeriesCheck graded_sym_series(const ModelManifold& m, const ModelBundle& e, std::size_t max_n);

/// chi_{-y}(X, E) = sum_i (-y)^{d_i} chi(X, L_i).
YPolynomial chi_minus_y_bundle(const ModelManifold& m, const ModelBundle& e);

}  // namespace symgen
