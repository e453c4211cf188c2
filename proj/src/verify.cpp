#include "symgen/verify.hpp"

#include <sstream>

#include "symgen/genera.hpp"
#include "symgen/ktheory.hpp"
#include "symgen/lefschetz.hpp"
#include "symgen/limits.hpp"
#include "symgen/partitions.hpp"

namespace symgen {

namespace {

std::string degrees_string(const std::vector<int>& degrees) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
    os << ')';
    return os.str();
}

std::string diamond_string(const HodgeDiamond& h) {
    std::ostringstream os;
    os << "d=" << h.dim() << " h=[";
    for (std::size_t p = 0; p < h.matrix().size(); ++p) {
        os << (p ? ";" : "");
        for (std::size_t q = 0; q < h.matrix()[p].size(); ++q) os << (q ? " " : "") << h.matrix()[p][q];
    }
    os << ']';
    return os.str();
}

}  // namespace

HodgeDiamond random_diamond(std::mt19937_64& rng, int max_dim, int max_total) {
    const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_dim + 1));
    const int total = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_total));
    std::vector<std::vector<long>> h(static_cast<std::size_t>(d) + 1, std::vector<long>(static_cast<std::size_t>(d) + 1, 0));
    const auto side = static_cast<std::uint64_t>(d + 1);
    for (int i = 0; i < total; ++i) {
        const auto cell = rng() % (side * side);
        ++h[cell / side][cell % side];
    }
    return HodgeDiamond(d, std::move(h));
}

SuiteReport verify_adams(int max_rank, int max_n) {
    SuiteReport report{"adams"};
    for (int r = 1; r <= max_rank; ++r) {
        const LineSum lines = ungraded_lines(r);
        for (int n = 1; n <= max_n; ++n) {
            const auto words = saturating_pow(static_cast<std::uint64_t>(r), static_cast<unsigned>(n));
            if (words > 1'000'000) continue;
            ++report.checks;
            const KClass phi = phi_cycle_tensor(lines, n, false);
            const KClass psi = adams(lines, n);
            if (!(phi == psi)) {
                report.fail("r=" + std::to_string(r) + " n=" + std::to_string(n) + ": phi=" + phi.to_string() +
                            " psi=" + psi.to_string());
            }
            if (words <= 100'000) {
                ++report.checks;
                const auto chars = character_orbit_check(lines, n, false);
                if (!chars.nonfixed_traces_vanish || !chars.action_consistent) {
                    report.fail("r=" + std::to_string(r) + " n=" + std::to_string(n) +
                                ": nonzero trace on a non-fixed orbit");
                }
            }
        }
    }
    if (report.passed) {
        report.lines.push_back("all orbit traces zero; \xcf\x86 = \xcf\x88^n for n \xe2\x89\xa4 " +
                               std::to_string(max_n) + " (ranks \xe2\x89\xa4 " + std::to_string(max_rank) + ")");
    }
    return report;
}

SuiteReport verify_graded_adams(int max_rank, int max_n, int max_degree) {
    SuiteReport report{"graded-adams"};
    for (int r = 1; r <= max_rank; ++r) {
        std::vector<int> degrees(static_cast<std::size_t>(r), 0);
        while (true) {
            const LineSum lines = graded_lines(degrees);
            for (int n = 1; n <= max_n; ++n) {
                ++report.checks;
                const KClass phi = phi_cycle_tensor(lines, n, true);
                const KClass gpsi = graded_adams(lines, n);
                if (!(phi == gpsi)) {
                    report.fail("degrees=" + degrees_string(degrees) + " n=" + std::to_string(n) +
                                ": phi=" + phi.to_string() + " Gpsi=" + gpsi.to_string());
                }
                const auto chars = character_orbit_check(lines, n, true);
                if (!chars.nonfixed_traces_vanish || !chars.action_consistent) {
                    report.fail("degrees=" + degrees_string(degrees) + " n=" + std::to_string(n) +
                                ": signed orbit character check failed");
                }
            }
            int pos = 0;
            while (pos < r && degrees[static_cast<std::size_t>(pos)] == max_degree) degrees[static_cast<std::size_t>(pos++)] = 0;
            if (pos == r) break;
            ++degrees[static_cast<std::size_t>(pos)];
        }
    }
    if (report.passed) {
        report.lines.push_back("all signed orbit traces zero; \xcf\x86 = G\xcf\x88^n for n \xe2\x89\xa4 " +
                               std::to_string(max_n) + ", degrees \xe2\x89\xa4 " + std::to_string(max_degree));
    }
    return report;
}

SuiteReport verify_local_term(int max_d, int max_n, int max_trunc) {
    SuiteReport report{"local-term"};
    for (int d = 1; d <= max_d; ++d) {
        for (int n = 1; n <= max_n; ++n) {
            for (int trunc = 0; trunc <= max_trunc; ++trunc) {
                ++report.checks;
                const auto term = cyclic_local_term(d, n, trunc);
                if (!(term.lhs == term.rhs)) {
                    report.fail("d=" + std::to_string(d) + " n=" + std::to_string(n) + " trunc=" +
                                std::to_string(trunc) + ": lhs=" + term.lhs.to_string() +
                                " rhs=" + term.rhs.to_string());
                }
            }
        }
    }
    if (report.passed) {
        report.lines.push_back("normal-bundle local term matches n^d Todd(x)/Todd(nx) for d \xe2\x89\xa4 " +
                               std::to_string(max_d) + ", n \xe2\x89\xa4 " + std::to_string(max_n) +
                               ", trunc \xe2\x89\xa4 " + std::to_string(max_trunc));
    }
    return report;
}

SuiteReport verify_lemma_scaling(int max_n) {
    SuiteReport report{"lemma-scaling"};
    const auto check = [&](const ModelManifold& m, const ModelBundle& e, const std::string& label) {
        const Rational chi = rr_number(m, e);
        if (!chi.is_integer()) report.fail(label + ": non-integral chi(X,E) = " + chi.to_string());
        for (int n = 1; n <= max_n; ++n) {
            ++report.checks;
            const Rational twisted = chi_sigma_n(m, e, n);
            if (!(twisted == chi)) {
                report.fail(label + " n=" + std::to_string(n) + ": chi_sigma_n=" + twisted.to_string() +
                            " chi=" + chi.to_string());
            }
        }
    };
    const auto p1 = ModelManifold::p1_power(1);
    const auto p2 = ModelManifold::projective(2);
    const auto p1p1 = ModelManifold::p1_power(2);
    for (long k = -3; k <= 3; ++k) {
        check(p1, ModelBundle::line(p1, k), "(P1, O(" + std::to_string(k) + "))");
        check(p2, ModelBundle::line(p2, k), "(P2, O(" + std::to_string(k) + "))");
    }
    for (long a = -2; a <= 2; ++a) {
        for (long b = -2; b <= 2; ++b) {
            check(p1p1, ModelBundle::exterior_product(p1p1, {a, b}),
                  "(P1xP1, O(" + std::to_string(a) + "," + std::to_string(b) + "))");
        }
    }
    check(ModelManifold::projective(3), ModelBundle::line(ModelManifold::projective(3), 1), "(P3, O(1))");
    for (int d = 1; d <= 3; ++d) {
        for (int r = 1; r <= 3; ++r) {
            for (int n = 1; n <= max_n; ++n) {
                ++report.checks;
                const auto h = lemma_homogeneity(d, r, n);
                if (!h.holds()) {
                    report.fail("F_d homogeneity d=" + std::to_string(d) + " r=" + std::to_string(r) +
                                " n=" + std::to_string(n) + ": " + h.scaled.to_string() + " vs " +
                                h.expected.to_string());
                }
            }
        }
    }
    if (report.passed) {
        report.lines.push_back("chi_sigma_n(X^n, E^n) = chi(X, E) on all model bundles for n \xe2\x89\xa4 " +
                               std::to_string(max_n) + "; F_d scales by n^d");
    }
    return report;
}

SuiteReport verify_oracle_sym(std::uint64_t seed, int diamonds, int max_n) {
    SuiteReport report{"oracle-sym"};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < diamonds; ++i) {
        const HodgeDiamond h = random_diamond(rng, 2, 4);
        const auto v = BigradedSuperSpace::from_diamond(h);
        const QSeries series = chiy_sym_series(h, static_cast<std::size_t>(max_n));
        for (int n = 0; n <= max_n; ++n) {
            report.checks += 2;
            const auto power = super_symmetric_power(v, n);
            const YPolynomial expected = chi_minus_y(power);
            if (!(series[static_cast<std::size_t>(n)] == expected)) {
                report.fail(diamond_string(h) + " n=" + std::to_string(n) + ": closed form " +
                            series[static_cast<std::size_t>(n)].to_string() + " vs basis enumeration " +
                            expected.to_string());
            }
            const auto molien = molien_average(v, n);
            const auto dims = graded_dimension(power);
            if (!(molien == dims)) {
                report.fail(diamond_string(h) + " n=" + std::to_string(n) + ": Molien average " +
                            molien.to_string() + " vs basis enumeration " + dims.to_string());
            }
        }
    }
    if (report.passed) {
        report.lines.push_back(std::to_string(diamonds) + " random diamonds (seed " + std::to_string(seed) +
                               "): closed form = super-symmetric power = Molien average for n \xe2\x89\xa4 " +
                               std::to_string(max_n));
    }
    return report;
}

SuiteReport verify_delocalized(int max_n) {
    SuiteReport report{"delocalized"};
    const std::vector<std::pair<std::string, HodgeDiamond>> cases = {
        {"P1", HodgeDiamond::projective_line()},
        {"P2", HodgeDiamond::projective_plane()},
        {"E", HodgeDiamond::elliptic_curve()},
        {"K3", HodgeDiamond::k3()},
    };
    for (const auto& [name, h] : cases) {
        const QSeries closed = chiy_orb_series(h, static_cast<std::size_t>(max_n));
        for (int n = 0; n <= max_n; ++n) {
            ++report.checks;
            const YPolynomial sum = chiy_orb_delocalized(h, n);
            if (!(sum == closed[static_cast<std::size_t>(n)])) {
                report.fail(name + " n=" + std::to_string(n) + ": class sum " + sum.to_string() +
                            " vs closed form " + closed[static_cast<std::size_t>(n)].to_string());
            }
        }
    }
    if (report.passed) {
        report.lines.push_back("delocalized class sums equal the orbifold product formula for n \xe2\x89\xa4 " +
                               std::to_string(max_n));
    }
    return report;
}

SuiteReport verify_euler_brute(int max_n) {
    SuiteReport report{"euler-brute"};
    for (long chi : {2L, 0L, 3L, -2L, 24L}) {
        const QSeries product = euler_orb_series(chi, static_cast<std::size_t>(max_n));
        for (int n = 0; n <= max_n; ++n) {
            ++report.checks;
            const Rational brute = euler_orb_bruteforce(chi, n);
            const Rational classes = euler_orb_class_sum(chi, n);
            const Rational closed = product[static_cast<std::size_t>(n)].constant_term();
            if (!(brute == classes && classes == closed)) {
                report.fail("chi=" + std::to_string(chi) + " n=" + std::to_string(n) + ": pairs " +
                            brute.to_string() + ", classes " + classes.to_string() + ", product " +
                            closed.to_string());
            }
        }
    }
    if (report.passed) {
        report.lines.push_back("commuting pairs = class sum = product formula for n \xe2\x89\xa4 " +
                               std::to_string(max_n));
    }
    return report;
}

SuiteReport verify_rr_series(std::size_t max_n) {
    SuiteReport report{"rr-series"};
    const auto p1 = ModelManifold::p1_power(1);
    const auto run = [&](const std::string& label, const SeriesCheck& c) {
        ++report.checks;
        if (!c.agree()) {
            report.fail(label + ": computed " + c.computed[c.computed.trunc()].to_string() + "... vs closed " +
                        c.closed_form[c.closed_form.trunc()].to_string());
        }
    };
    for (long k = -2; k <= 2; ++k) {
        const auto e = ModelBundle::line(p1, k);
        run("sym (P1, O(" + std::to_string(k) + "))", sym_rr_series(p1, e, max_n));
        run("orb (P1, O(" + std::to_string(k) + "))", orb_rr_series(p1, e, max_n));
    }
    const auto p2 = ModelManifold::projective(2);
    run("sym (P2, O(1))", sym_rr_series(p2, ModelBundle::line(p2, 1), max_n));
    run("orb (P2, O(1))", orb_rr_series(p2, ModelBundle::line(p2, 1), max_n));
    run("graded (P1, Lambda T*)", graded_sym_series(p1, ModelBundle::exterior_algebra(p1, -1), max_n));
    run("graded (P1, Lambda T)", graded_sym_series(p1, ModelBundle::exterior_algebra(p1, +1), max_n));
    if (report.passed) {
        report.lines.push_back("cycle-data series equal closed forms through p^" + std::to_string(max_n));
    }
    return report;
}

std::vector<SuiteReport> verify_all(std::uint64_t seed) {
    std::vector<SuiteReport> out;
    out.push_back(verify_adams());
    out.push_back(verify_delocalized());
    out.push_back(verify_euler_brute());
    out.push_back(verify_graded_adams());
    out.push_back(verify_lemma_scaling());
    out.push_back(verify_local_term());
    out.push_back(verify_oracle_sym(seed));
    out.push_back(verify_rr_series());
    return out;
}

}  // namespace symgen
