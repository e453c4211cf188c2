#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "symgen/hodge.hpp"

namespace symgen {

struct SuiteReport {
    explicit SuiteReport(std::string suite_name) : name(std::move(suite_name)) {}

    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::vector<std::string> lines;  // summary lines
    std::string counterexample;      // first failure: inputs and both values

    void fail(std::string detail) {
        if (passed) counterexample = std::move(detail);
        passed = false;
    }
};

/// Random diamond with dimension <= max_dim and 1..max_total classes placed
/// uniformly; fully determined by the engine state.
HodgeDiamond random_diamond(std::mt19937_64& rng, int max_dim, int max_total);

// phi_{sigma_n}(E^{tensor n}) = psi^n(E) for ranks <= max_rank and n <= max_n
// with r^n <= 10^6; orbit characters checked where r^n <= 10^5.
SuiteReport verify_adams(int max_rank = 4, int max_n = 8);
// Graded analogue over all degree vectors in {0, .., max_degree}^r.
SuiteReport verify_graded_adams(int max_rank = 3, int max_n = 6, int max_degree = 2);
SuiteReport verify_local_term(int max_d = 3, int max_n = 5, int max_trunc = 6);
SuiteReport verify_lemma_scaling(int max_n = 6);
SuiteReport verify_oracle_sym(std::uint64_t seed = 1, int diamonds = 20, int max_n = 4);
SuiteReport verify_delocalized(int max_n = 6);
SuiteReport verify_euler_brute(int max_n = 5);
SuiteReport verify_rr_series(std::size_t max_n = 8);

/// Every suite above with default parameters, ordered by suite name.
std::vector<SuiteReport> verify_all(std::uint64_t seed = 1);

}  // namespace symgen
