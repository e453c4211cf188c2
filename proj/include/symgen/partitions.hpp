#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace symgen {

/// Conjugacy class of S_n recorded as N_1..N_n, the number of l-cycles.
class CycleType {
public:
    /// counts[l-1] = N_l. Throws std::invalid_argument unless sum l*N_l == n.
    CycleType(int n, std::vector<int> counts);

    static CycleType identity(int n);

    int n() const { return n_; }
    /// N_l for 1 <= l (zero beyond n).
    int count(int l) const;
    const std::vector<int>& counts() const { return counts_; }
    /// Total number of cycles, sum N_l.
    int cycle_count() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;

    /// "(N_1,...,N_n)".
    std::string to_string() const;

private:
    int n_;
    std::vector<int> counts_;
};

/// All cycle types of S_n, 1 <= n <= 40, ordered by decreasing (N_1, ..., N_n)
/// lexicographically: the identity first, a single n-cycle last.
std::vector<CycleType> partitions_of(int n);

/// |Z_g| = prod_l l^N_l * N_l!. The class size is n! / centralizer_order.
mpz_class centralizer_order(const CycleType& t);
mpz_class class_size(const CycleType& t);

/// A permutation of {0..n-1}; images()[i] is the image of i.
class Permutation {
public:
    /// Throws std::invalid_argument unless `images` is a bijection of 0..n-1.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    /// (*this * other)(i) = (*this)(other(i)).
    Permutation operator*(const Permutation& other) const;
    friend bool operator==(const Permutation&, const Permutation&) = default;

    CycleType cycle_type() const;

private:
    std::vector<int> images_;
};

/// All n! permutations in lexicographic order of their image lists (n <= 10).
std::vector<Permutation> all_permutations(int n);

/// All ordered pairs (g, h) in S_n x S_n with gh = hg (n <= 7).
std::vector<std::pair<Permutation, Permutation>> commuting_pairs(int n);

/// Number of orbits of the subgroup <g, h> acting on {0..n-1}.
int joint_orbit_count(const Permutation& g, const Permutation& h);

struct WordOrbit {
    std::vector<int> representative;  // lexicographically least word, letters 1..r
    int length = 0;
};

/// Orbits of the cyclic shift (j_1, ..., j_n) -> (j_n, j_1, ..., j_{n-1}) on
/// words of length n over r letters (r^n <= 10^6), ordered by representative.
std::vector<WordOrbit> orbit_decomposition_on_words(int r, int n);

/// Applies the cyclic shift once.
std::vector<int> cyclic_shift(const std::vector<int>& word);

}  // namespace symgen
