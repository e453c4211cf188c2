#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symgen/partitions.hpp"
#include "symgen/rational.hpp"
#include "symgen/ypolynomial.hpp"

namespace symgen {

/// How the diamond entries are read: h^{p,q} for ordinary Dolbeault
/// cohomology, h^{-p,q} = dim H^q(M, Lambda^p TM) for the b-side theory.
enum class Theory { hodge, b_side };

std::string to_string(Theory t);

/// Hodge numbers of a closed complex d-manifold, h[p][q] for 0 <= p, q <= d.
class HodgeDiamond {
public:
    /// Throws std::invalid_argument on a non-square matrix of the wrong size or
    /// a negative entry.
    HodgeDiamond(int d, std::vector<std::vector<long>> h, Theory theory = Theory::hodge);

    int dim() const { return d_; }
    Theory theory() const { return theory_; }
    long at(int p, int q) const { return h_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]; }
    const std::vector<std::vector<long>>& matrix() const { return h_; }
    long total_dimension() const;

    /// h^{p,q} = h^{q,p} and h^{p,q} = h^{d-p,d-q}.
    bool has_hodge_symmetry() const;
    bool has_serre_symmetry() const;
    /// Human-readable warnings for each failed symmetry; empty when both hold.
    std::vector<std::string> symmetry_warnings() const;

    static HodgeDiamond point();
    static HodgeDiamond projective_line();
    static HodgeDiamond projective_plane();
    static HodgeDiamond elliptic_curve();
    static HodgeDiamond k3();

private:
    int d_;
    std::vector<std::vector<long>> h_;
    Theory theory_;
};

using Bidegree = std::pair<int, int>;

/// Finite-dimensional bigraded super vector space; the parity of a vector of
/// bidegree (p,q) is (p+q) mod 2.
struct BigradedSuperSpace {
    std::map<Bidegree, long> dims;  // zero entries are not stored

    static BigradedSuperSpace from_diamond(const HodgeDiamond& h);
    long total_dimension() const;
    friend bool operator==(const BigradedSuperSpace&, const BigradedSuperSpace&) = default;
};

/// Polynomial in two bookkeeping variables s, t tracking bidegree (p,q) as s^p t^q.
class BidegreePolynomial {
public:
    using TermMap = std::map<Bidegree, Rational>;

    BidegreePolynomial() = default;
    static BidegreePolynomial constant(const Rational& c);
    static BidegreePolynomial monomial(const Rational& c, int p, int q);

    const TermMap& terms() const { return terms_; }
    Rational coefficient(int p, int q) const;

    BidegreePolynomial& operator+=(const BidegreePolynomial& rhs);
    BidegreePolynomial& operator*=(const Rational& scalar);
    friend BidegreePolynomial operator*(const BidegreePolynomial& a, const BidegreePolynomial& b);
    friend BidegreePolynomial operator+(BidegreePolynomial a, const BidegreePolynomial& b) { return a += b; }
    friend bool operator==(const BidegreePolynomial&, const BidegreePolynomial&) = default;

    std::string to_string() const;

private:
    void add_term(const Bidegree& b, const Rational& c);
    TermMap terms_;
};

/// chi_{-y}(M) = sum_{p,q} (-1)^q h^{p,q} (-y)^p.
YPolynomial chi_minus_y(const HodgeDiamond& h);
YPolynomial chi_minus_y(const BigradedSuperSpace& v);

/// chi = sum (-1)^{p+q} h^{p,q}, which is chi_{-y} evaluated at y = 1.
long euler_number(const HodgeDiamond& h);
long euler_number(const BigradedSuperSpace& v);

/// Graded-symmetric n-th power by explicit basis enumeration: even vectors
/// commute, odd vectors anticommute (so no odd vector repeats), bidegrees add.
/// Guarded by total_dimension^n <= 10^6.
BigradedSuperSpace super_symmetric_power(const BigradedSuperSpace& v, int n);

/// sum dims(p,q) s^p t^q.
BidegreePolynomial graded_dimension(const BigradedSuperSpace& v);

/// Trace of a permutation of cycle type t acting graded-antisymmetrically on
/// H^{tensor n}: each l-cycle contributes sum (-1)^{(l-1)(p+q)} h^{p,q} s^{lp} t^{lq}.
BidegreePolynomial molien_trace(const HodgeDiamond& h, const CycleType& t);
BidegreePolynomial molien_trace(const BigradedSuperSpace& v, const CycleType& t);

/// (1/n!) sum over S_n of the graded trace, i.e. sum over cycle types of
/// molien_trace / centralizer_order. n = 0 gives 1.
BidegreePolynomial molien_average(const BigradedSuperSpace& v, int n);

}  // namespace symgen
