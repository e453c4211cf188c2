#include "symgen/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "symgen/errors.hpp"
#include "symgen/limits.hpp"

namespace symgen {

CycleType::CycleType(int n, std::vector<int> counts) : n_(n), counts_(std::move(counts)) {
    if (n < 0) throw std::invalid_argument("CycleType: negative n");
    counts_.resize(static_cast<std::size_t>(n), 0);
    long total = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] < 0) throw std::invalid_argument("CycleType: negative cycle count");
        total += static_cast<long>(i + 1) * counts_[i];
    }
    if (total != n) {
        throw std::invalid_argument("CycleType: sum of l*N_l is " + std::to_string(total) +
                                    ", expected " + std::to_string(n));
    }
}

CycleType CycleType::identity(int n) {
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    if (n > 0) counts[0] = n;
    return CycleType(n, std::move(counts));
}

int CycleType::count(int l) const {
    if (l < 1 || l > n_) return 0;
    return counts_[static_cast<std::size_t>(l - 1)];
}

int CycleType::cycle_count() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::string CycleType::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < counts_.size(); ++i) os << (i ? "," : "") << counts_[i];
    os << ')';
    return os.str();
}

std::vector<CycleType> partitions_of(int n) {
    if (n < 1 || n > 40) {
        throw GuardViolation("partitions_of: n = " + std::to_string(n) + " outside 1..40");
    }
    std::vector<std::vector<int>> found;
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    // Choose parts from the largest size down.
    std::function<void(int, int)> place = [&](int remaining, int max_part) {
        if (remaining == 0) {
            found.push_back(counts);
            return;
        }
        for (int l = std::min(remaining, max_part); l >= 1; --l) {
            ++counts[static_cast<std::size_t>(l - 1)];
            place(remaining - l, l);
            --counts[static_cast<std::size_t>(l - 1)];
        }
    };
    place(n, n);
    std::sort(found.begin(), found.end(), std::greater<>());
    std::vector<CycleType> out;
    out.reserve(found.size());
    for (auto& c : found) out.emplace_back(n, std::move(c));
    return out;
}

mpz_class centralizer_order(const CycleType& t) {
    mpz_class order = 1;
    for (int l = 1; l <= t.n(); ++l) {
        const int m = t.count(l);
        if (m == 0) continue;
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(m));
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
        order *= power * fact;
    }
    return order;
}

mpz_class class_size(const CycleType& t) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(t.n()));
    return fact / centralizer_order(t);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("Permutation: images are not a bijection");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = images_[static_cast<std::size_t>(other.images_[i])];
    }
    return Permutation(std::move(out));
}

CycleType Permutation::cycle_type() const {
    const int n = size();
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        ++counts[static_cast<std::size_t>(len - 1)];
    }
    return CycleType(n, std::move(counts));
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 0 || n > 10) {
        throw GuardViolation("all_permutations: n = " + std::to_string(n) + " outside 0..10");
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<std::pair<Permutation, Permutation>> commuting_pairs(int n) {
    if (n < 0 || n > 7) {
        throw GuardViolation("commuting_pairs: n = " + std::to_string(n) + " outside 0..7");
    }
    const auto perms = all_permutations(n);
    check_enumeration("commuting_pairs", static_cast<std::uint64_t>(perms.size()) * perms.size(),
                      25'401'600);
    std::vector<std::pair<Permutation, Permutation>> out;
    for (const auto& g : perms) {
        for (const auto& h : perms) {
            bool commute = true;
            for (int i = 0; i < n && commute; ++i) commute = g(h(i)) == h(g(i));
            if (commute) out.emplace_back(g, h);
        }
    }
    return out;
}

int joint_orbit_count(const Permutation& g, const Permutation& h) {
    const int n = g.size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    int components = n;
    const auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    };
    for (int i = 0; i < n; ++i) {
        unite(i, g(i));
        unite(i, h(i));
    }
    return components;
}

std::vector<int> cyclic_shift(const std::vector<int>& word) {
    if (word.empty()) return word;
    std::vector<int> out;
    out.reserve(word.size());
    out.push_back(word.back());
    out.insert(out.end(), word.begin(), word.end() - 1);
    return out;
}

std::vector<WordOrbit> orbit_decomposition_on_words(int r, int n) {
    if (r < 1 || n < 1) throw std::invalid_argument("orbit_decomposition_on_words: r, n must be >= 1");
    check_enumeration("orbit_decomposition_on_words",
                      saturating_pow(static_cast<std::uint64_t>(r), static_cast<unsigned>(n)),
                      1'000'000);
    std::vector<WordOrbit> out;
    std::vector<int> word(static_cast<std::size_t>(n), 1);
    while (true) {
        // A word represents its orbit iff it is the least rotation.
        bool least = true;
        int length = n;
        std::vector<int> rotated = word;
        for (int k = 1; k <= n; ++k) {
            rotated = cyclic_shift(rotated);
            if (rotated == word) {
                length = k;
                break;
            }
            if (rotated < word) {
                least = false;
                break;
            }
        }
        if (least) out.push_back({word, length});
        int pos = n - 1;
        while (pos >= 0 && word[static_cast<std::size_t>(pos)] == r) {
            word[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++word[static_cast<std::size_t>(pos)];
    }
    return out;
}

}  // namespace symgen
