#include <doctest.h>

#include <map>
#include <numeric>

#include <cstdlib>

#include "symgen/errors.hpp"
#include "symgen/limits.hpp"
#include "symgen/partitions.hpp"

using namespace symgen;

namespace {

// p(n, k): partitions of n into parts of size <= k.
long partition_count(int n, int k) {
    if (n == 0) return 1;
    if (n < 0 || k == 0) return 0;
    return partition_count(n - k, k) + partition_count(n, k - 1);
}

mpz_class fact(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("partitions_of small cases") {
    const auto one = partitions_of(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].counts() == std::vector<int>{1});

    const auto three = partitions_of(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0].counts() == std::vector<int>{3, 0, 0});
    CHECK(three[1].counts() == std::vector<int>{1, 1, 0});
    CHECK(three[2].counts() == std::vector<int>{0, 0, 1});

    CHECK(partitions_of(5).size() == 7);
    CHECK_THROWS_AS(partitions_of(0), GuardViolation);
    CHECK_THROWS_AS(partitions_of(41), GuardViolation);
    CHECK_THROWS_AS(CycleType(3, {1, 0, 1}), std::invalid_argument);
}

TEST_CASE("partition count matches the recursive counter") {
    for (int n = 1; n <= 20; ++n) {
        const auto types = partitions_of(n);
        CHECK(static_cast<long>(types.size()) == partition_count(n, n));
        for (std::size_t i = 1; i < types.size(); ++i) CHECK(types[i - 1].counts() > types[i].counts());
    }
}

TEST_CASE("centralizer orders") {
    CHECK(centralizer_order(CycleType(2, {2, 0})) == 2);
    CHECK(centralizer_order(CycleType(2, {0, 1})) == 2);
    CHECK(centralizer_order(CycleType(3, {0, 0, 1})) == 3);
    CHECK(class_size(CycleType(3, {0, 0, 1})) == 2);
    CHECK(centralizer_order(CycleType(1, {1})) == 1);
}

TEST_CASE("class sizes sum to n!") {
    for (int n = 1; n <= 9; ++n) {
        mpz_class total = 0;
        for (const auto& t : partitions_of(n)) total += class_size(t);
        CHECK(total == fact(n));
    }
}

TEST_CASE("class sizes agree with explicit permutations") {
    for (int n = 1; n <= 6; ++n) {
        std::map<std::vector<int>, long> seen;
        for (const auto& g : all_permutations(n)) ++seen[g.cycle_type().counts()];
        for (const auto& t : partitions_of(n)) CHECK(mpz_class(seen[t.counts()]) == class_size(t));
    }
}

TEST_CASE("commuting pairs") {
    CHECK(commuting_pairs(1).size() == 1);
    CHECK(commuting_pairs(2).size() == 4);
    CHECK(commuting_pairs(3).size() == 18);
    for (int n = 1; n <= 5; ++n) {
        // Independent double loop over explicit permutations.
        const auto perms = all_permutations(n);
        std::size_t count = 0;
        for (const auto& g : perms) {
            for (const auto& h : perms) count += (g * h == h * g) ? 1 : 0;
        }
        CHECK(commuting_pairs(n).size() == count);
        CHECK(mpz_class(static_cast<unsigned long>(count)) == partition_count(n, n) * fact(n));
    }
    CHECK_THROWS_AS(commuting_pairs(8), GuardViolation);
}

TEST_CASE("joint orbits of two permutations") {
    const Permutation id = Permutation::identity(4);
    const Permutation swap01({1, 0, 2, 3});
    const Permutation swap23({0, 1, 3, 2});
    CHECK(joint_orbit_count(id, id) == 4);
    CHECK(joint_orbit_count(swap01, id) == 3);
    CHECK(joint_orbit_count(swap01, swap23) == 2);
    CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
}

TEST_CASE("orbit decomposition on words") {
    const auto two_two = orbit_decomposition_on_words(2, 2);
    REQUIRE(two_two.size() == 3);
    CHECK(two_two[0].representative == std::vector<int>{1, 1});
    CHECK(two_two[0].length == 1);
    CHECK(two_two[1].representative == std::vector<int>{1, 2});
    CHECK(two_two[1].length == 2);
    CHECK(two_two[2].representative == std::vector<int>{2, 2});

    const auto single = orbit_decomposition_on_words(1, 5);
    REQUIRE(single.size() == 1);
    CHECK(single[0].length == 1);

    const auto two_three = orbit_decomposition_on_words(2, 3);
    CHECK(two_three.size() == 4);
    CHECK(std::count_if(two_three.begin(), two_three.end(), [](const auto& o) { return o.length == 3; }) == 2);
    CHECK_THROWS_AS(orbit_decomposition_on_words(10, 7), GuardViolation);
}

TEST_CASE("orbit lengths divide n, sum to r^n, and match Burnside") {
    for (int r = 1; r <= 4; ++r) {
        for (int n = 1; n <= 7; ++n) {
            const auto orbits = orbit_decomposition_on_words(r, n);
            long total = 0;
            for (const auto& o : orbits) {
                CHECK(n % o.length == 0);
                total += o.length;
            }
            CHECK(total == ipow(r, n));
            // Burnside: #orbits = (1/n) sum_k r^{gcd(k, n)}.
            long fixed = 0;
            for (int k = 0; k < n; ++k) fixed += ipow(r, std::gcd(k, n));
            CHECK(static_cast<long>(orbits.size()) * n == fixed);
        }
    }
}

TEST_CASE("enumeration caps can be lowered from the environment") {
    CHECK(enumeration_cap(1000) == 1000);
    ::setenv("SYMGEN_MAX_CELLS", "50", 1);
    CHECK(enumeration_cap(1000) == 50);
    CHECK_THROWS_AS(orbit_decomposition_on_words(2, 6), GuardViolation);
    CHECK(orbit_decomposition_on_words(2, 5).size() == 8);
    ::setenv("SYMGEN_MAX_CELLS", "5000000", 1);
    CHECK(enumeration_cap(1000) == 1000);
    ::unsetenv("SYMGEN_MAX_CELLS");
    CHECK(saturating_pow(10, 30) == UINT64_MAX);
    CHECK(saturating_pow(3, 4) == 81);
}
