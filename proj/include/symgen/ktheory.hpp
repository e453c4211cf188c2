#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symgen/ypolynomial.hpp"

namespace symgen {

/// A formal line bundle L_id with an integer grading degree (0 when ungraded).
struct LineSymbol {
    int id = 0;
    int degree = 0;
    friend bool operator==(const LineSymbol&, const LineSymbol&) = default;
};

/// A split bundle E = L_1 + ... + L_r.
using LineSum = std::vector<LineSymbol>;

/// Formal monomial L_{i_1}^{a_1} ... L_{i_k}^{a_k}, sorted by id, exponents > 0.
using KMonomial = std::vector<std::pair<int, int>>;

/// Finite Z[y^{1/2}]-combination of formal line-bundle monomials.
class KClass {
public:
    using TermMap = std::map<KMonomial, YPolynomial>;

    KClass() = default;
    /// The class of E itself: sum of L_m with coefficient 1.
    static KClass from_lines(const LineSum& lines);

    void add(const KMonomial& monomial, const YPolynomial& coefficient);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    KClass& operator+=(const KClass& rhs);
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend bool operator==(const KClass&, const KClass&) = default;

    /// e.g. "L1^2 + L2^2", "(-1)*L1^2".
    std::string to_string() const;

private:
    TermMap terms_;
};

/// Canonical monomial of a word j_1 ... j_n over the ids of `lines` (letters 1..r).
KMonomial word_monomial(const LineSum& lines, const std::vector<int>& word);

/// psi^n(E) = sum_m L_m^n.
KClass adams(const LineSum& lines, int n);

/// G psi^n(E) = sum_m (-1)^{(n-1) d_m} L_m^n. With `minus_y_weights`, the input
/// is read as E_{-y} = sum_m (-y)^{d_m} L_m and each term also carries (-y)^{n d_m}.
KClass graded_adams(const LineSum& lines, int n, bool minus_y_weights = false);

/// Koszul sign of the cyclic shift (j_1..j_n) -> (j_n, j_1, ..., j_{n-1}):
/// the last factor moves past all others, giving (-1)^{d_last * sum of other d}.
int koszul_shift_sign(const LineSum& lines, const std::vector<int>& word);

/// phi_{sigma_n}(E^{tensor n}) as the monomial-weighted trace of the (signed,
/// when graded) cyclic shift on the word basis of E^{tensor n}. Requires r^n <= 10^6.
KClass phi_cycle_tensor(const LineSum& lines, int n, bool graded, bool minus_y_weights = false);

struct OrbitBlockReport {
    std::vector<int> representative;  // letters 1..r
    int length = 0;
    int block_trace = 0;  // trace of the shift restricted to the orbit span
    int holonomy = 0;     // scalar by which shift^length acts on the representative
};

struct CharacterReport {
    std::vector<OrbitBlockReport> orbits;
    bool nonfixed_traces_vanish = true;  // every orbit of length > 1 has trace 0
    bool action_consistent = true;       // shift^n acts as the identity on each block
};

/// Per-orbit characters of the cyclic shift on E^{tensor n}. Requires r^n <= 10^5.
CharacterReport character_orbit_check(const LineSum& lines, int n, bool graded);

/// r ungraded lines with ids 1..r.
LineSum ungraded_lines(int r);
/// Lines with ids 1..r and the given degrees.
LineSum graded_lines(const std::vector<int>& degrees);

}  // namespace symgen
