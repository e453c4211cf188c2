#include <doctest.h>

#include <random>

#include "symgen/errors.hpp"
#include "symgen/ktheory.hpp"

using namespace symgen;

namespace {

const YPolynomial y = YPolynomial::y();

KClass single(int id, int power, const YPolynomial& c = YPolynomial(1)) {
    KClass k;
    k.add({{id, power}}, c);
    return k;
}

// Independent trace of the (signed) cyclic shift: walk every word with an
// odometer, keep those equal to their shift.
KClass trace_oracle(const LineSum& lines, int n, bool graded) {
    const int r = static_cast<int>(lines.size());
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    KClass out;
    while (true) {
        bool fixed = true;
        for (int i = 0; i < n; ++i) fixed = fixed && word[static_cast<std::size_t>(i)] == word[static_cast<std::size_t>((i + 1) % n)];
        if (fixed) {
            const auto& line = lines[static_cast<std::size_t>(word[0])];
            // Moving one odd factor past n - 1 copies of itself.
            const int sign = (graded && line.degree % 2 != 0 && (n - 1) % 2 != 0) ? -1 : 1;
            out.add({{line.id, n}}, YPolynomial(sign));
        }
        int pos = 0;
        while (pos < n && ++word[static_cast<std::size_t>(pos)] == r) word[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
    }
    return out;
}

}  // namespace

TEST_CASE("Adams operations") {
    const auto two = ungraded_lines(2);
    CHECK(adams(two, 2) == single(1, 2) + single(2, 2));
    CHECK(adams(two, 1) == KClass::from_lines(two));
    CHECK(adams(ungraded_lines(3), 3) == single(1, 3) + single(2, 3) + single(3, 3));
    CHECK(adams(two, 2).to_string() == "L1^2 + L2^2");
}

TEST_CASE("Adams operations are additive") {
    for (int r = 1; r <= 3; ++r) {
        for (int s = 1; s <= 3; ++s) {
            LineSum e = ungraded_lines(r);
            LineSum f;
            for (int i = 1; i <= s; ++i) f.push_back({r + i, 0});
            LineSum both = e;
            both.insert(both.end(), f.begin(), f.end());
            for (int n = 1; n <= 5; ++n) CHECK(adams(both, n) == adams(e, n) + adams(f, n));
        }
    }
}

TEST_CASE("graded Adams operations") {
    const auto odd = graded_lines({1});
    CHECK(graded_adams(odd, 2) == single(1, 2, YPolynomial(-1)));
    CHECK(graded_adams(odd, 3) == single(1, 3));
    CHECK(graded_adams(odd, 2).to_string() == "(-1)*L1^2");
    for (int n = 1; n <= 5; ++n) CHECK(graded_adams(graded_lines({0, 0, 2}), n) == adams(ungraded_lines(3), n));
    // Weighted input E_{-y} = L1 - y L2: each term also carries (-y)^{n d}.
    CHECK(graded_adams(graded_lines({0, 1}), 2, true) == single(1, 2) + single(2, 2, -y.pow(2)));
    CHECK(graded_adams(graded_lines({0, 1}), 3, true) == single(1, 3) + single(2, 3, -y.pow(3)));
}

TEST_CASE("Koszul signs of the cyclic shift") {
    const auto lines = graded_lines({1, 0, 1});
    CHECK(koszul_shift_sign(lines, {1, 1}) == -1);
    CHECK(koszul_shift_sign(lines, {1, 2}) == 1);
    CHECK(koszul_shift_sign(lines, {3, 1, 1}) == 1);
    CHECK(koszul_shift_sign(lines, {1, 2, 3}) == -1);
    CHECK(koszul_shift_sign(lines, {2, 1, 3}) == -1);
    CHECK(koszul_shift_sign(lines, {1, 3, 2}) == 1);
}

TEST_CASE("eigenbundle map on tensor powers") {
    CHECK(phi_cycle_tensor(ungraded_lines(2), 2, false) == single(1, 2) + single(2, 2));
    CHECK(phi_cycle_tensor(graded_lines({1}), 2, true) == single(1, 2, YPolynomial(-1)));
    for (int n = 1; n <= 6; ++n) CHECK(phi_cycle_tensor(ungraded_lines(1), n, false) == single(1, n));
    CHECK_THROWS_AS(phi_cycle_tensor(ungraded_lines(4), 11, false), GuardViolation);
}

TEST_CASE("eigenbundle map equals Adams operations") {
    for (int r = 1; r <= 4; ++r) {
        for (int n = 1; n <= 8; ++n) {
            double size = 1;
            for (int i = 0; i < n; ++i) size *= r;
            if (size > 1e6) continue;
            const auto lines = ungraded_lines(r);
            const KClass phi = phi_cycle_tensor(lines, n, false);
            CHECK(phi == adams(lines, n));
            CHECK(phi == trace_oracle(lines, n, false));
        }
    }
}

TEST_CASE("graded eigenbundle map equals graded Adams operations") {
    for (int r = 1; r <= 3; ++r) {
        for (int mask = 0; mask < (1 << r); ++mask) {
            std::vector<int> degrees;
            for (int i = 0; i < r; ++i) degrees.push_back((mask >> i) & 1);
            const auto lines = graded_lines(degrees);
            for (int n = 1; n <= 6; ++n) {
                const KClass phi = phi_cycle_tensor(lines, n, true);
                CHECK(phi == graded_adams(lines, n));
                CHECK(phi == trace_oracle(lines, n, true));
                CHECK(phi_cycle_tensor(lines, n, true, true) == graded_adams(lines, n, true));
            }
        }
    }
    std::mt19937_64 rng(59);
    for (int i = 0; i < 20; ++i) {
        std::vector<int> degrees;
        for (int k = 0; k < 3; ++k) degrees.push_back(static_cast<int>(rng() % 7) - 3);
        const auto lines = graded_lines(degrees);
        for (int n = 1; n <= 5; ++n) CHECK(phi_cycle_tensor(lines, n, true) == graded_adams(lines, n));
    }
}

TEST_CASE("orbit characters") {
    const auto r2n2 = character_orbit_check(ungraded_lines(2), 2, false);
    REQUIRE(r2n2.orbits.size() == 3);
    CHECK(r2n2.orbits[1].representative == std::vector<int>{1, 2});
    CHECK(r2n2.orbits[1].length == 2);
    CHECK(r2n2.orbits[1].block_trace == 0);
    CHECK(r2n2.orbits[0].block_trace == 1);
    CHECK(r2n2.nonfixed_traces_vanish);

    const auto r2n4 = character_orbit_check(ungraded_lines(2), 4, false);
    bool found = false;
    for (const auto& o : r2n4.orbits) {
        if (o.representative == std::vector<int>{1, 2, 1, 2}) {
            found = true;
            CHECK(o.length == 2);
            CHECK(o.block_trace == 0);
        }
    }
    CHECK(found);

    for (const auto& o : character_orbit_check(ungraded_lines(1), 5, false).orbits) CHECK(o.length == 1);

    const auto odd = character_orbit_check(graded_lines({1}), 2, true);
    REQUIRE(odd.orbits.size() == 1);
    CHECK(odd.orbits[0].block_trace == -1);

    for (int r = 1; r <= 3; ++r) {
        for (int n = 1; n <= 6; ++n) {
            for (bool graded : {false, true}) {
                std::vector<int> degrees(static_cast<std::size_t>(r), 0);
                for (int i = 0; i < r; i += 2) degrees[static_cast<std::size_t>(i)] = graded ? 1 : 0;
                const auto report = character_orbit_check(graded_lines(degrees), n, graded);
                CHECK(report.nonfixed_traces_vanish);
                CHECK(report.action_consistent);
                for (const auto& o : report.orbits) {
                    if (o.length > 1) CHECK(o.block_trace == 0);
                }
            }
        }
    }
    CHECK_THROWS_AS(character_orbit_check(ungraded_lines(4), 9, false), GuardViolation);
}
