#include "symgen/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "symgen/errors.hpp"
#include "symgen/genera.hpp"
#include "symgen/hodge_io.hpp"
#include "symgen/lefschetz.hpp"
#include "symgen/serialize.hpp"
#include "symgen/verify.hpp"

namespace symgen {

namespace {

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

HodgeDiamond load_diamond(const CliConfig& cfg, std::ostream& err) {
    if (!cfg.hodge_path) throw std::invalid_argument("--hodge FILE is required for this series");
    HodgeDiamond h = read_hodge_file(*cfg.hodge_path);
    for (const auto& w : h.symmetry_warnings()) err << "warning: " << w << '\n';
    return h;
}

ModelBundle load_bundle(const CliConfig& cfg, const ModelManifold& m, bool graded) {
    if (!cfg.lambda.empty()) {
        if (cfg.lambda == "cotangent") return ModelBundle::exterior_algebra(m, -1);
        if (cfg.lambda == "tangent") return ModelBundle::exterior_algebra(m, +1);
        throw std::invalid_argument("--lambda must be 'cotangent' or 'tangent'");
    }
    if (!graded) return ModelBundle::line(m, cfg.bundle);
    // O + O(k) placed in degree `grade`.
    ModelBundle e = ModelBundle::trivial(m, 1);
    e.summands.push_back({m.hyperplane(cfg.bundle), cfg.grade});
    return e;
}

QSeries delocalized_series(const HodgeDiamond& h, std::size_t max_n, WeightConvention conv) {
    std::vector<YPolynomial> coeffs;
    for (std::size_t n = 0; n <= max_n; ++n) {
        const int k = static_cast<int>(n);
        coeffs.push_back(h.theory() == Theory::hodge ? chiy_orb_delocalized(h, k, conv)
                                                     : chihat_orb_delocalized(h, k, conv));
    }
    return QSeries(max_n, std::move(coeffs));
}

int run_series(const std::string& flavor, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const OutputFormat format = parse_output_format(cfg.format);
    const std::size_t order = cfg.trunc.value_or(cfg.max_n);
    if (cfg.max_n > order) throw std::invalid_argument("--max-n must not exceed --trunc");

    if (flavor == "rr-sym" || flavor == "rr-orb" || flavor == "rr-graded") {
        const ModelManifold m = ModelManifold::parse(cfg.model);
        const bool graded = flavor == "rr-graded";
        const ModelBundle e = load_bundle(cfg, m, graded);
        const SeriesCheck check = flavor == "rr-sym" ? sym_rr_series(m, e, order)
                                  : flavor == "rr-orb" ? orb_rr_series(m, e, order)
                                                       : graded_sym_series(m, e, order);
        if (!check.agree()) {
            for (std::size_t k = 0; k <= order; ++k) {
                if (!(check.computed[k] == check.closed_form[k])) {
                    std::ostringstream os;
                    os << flavor << " on " << m.name() << ": coefficient of p^" << k << " from cycle data is "
                       << check.computed[k].to_string() << ", closed form gives "
                       << check.closed_form[k].to_string();
                    throw VerificationFailure(os.str());
                }
            }
        }
        out << format_series(check.computed.truncated(cfg.max_n), format, "p");
        return 0;
    }

    const GenusFlavor f = parse_genus_flavor(flavor);
    QSeries series(0);
    if ((f == GenusFlavor::euler_sym || f == GenusFlavor::euler_orb) && cfg.chi && !cfg.hodge_path) {
        series = f == GenusFlavor::euler_sym ? euler_sym_series(*cfg.chi, order) : euler_orb_series(*cfg.chi, order);
    } else {
        const HodgeDiamond h = load_diamond(cfg, err);
        const bool orbifold = f == GenusFlavor::chiy_orb || f == GenusFlavor::chihat_orb;
        if (cfg.method == "classes") {
            if (!orbifold) throw std::invalid_argument("--method classes applies to chiy-orb and chihat-orb");
            const Theory expected = f == GenusFlavor::chiy_orb ? Theory::hodge : Theory::b_side;
            if (h.theory() != expected) throw std::invalid_argument("diamond theory does not match " + flavor);
            series = delocalized_series(h, order, parse_weight_convention(cfg.weight_convention));
        } else if (cfg.method == "closed") {
            series = compute({h, order, f});
        } else {
            throw std::invalid_argument("--method must be 'closed' or 'classes'");
        }
    }
    out << format_series(series.truncated(cfg.max_n), format);
    return 0;
}

void print_report(const SuiteReport& r, std::ostream& out) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.checks << " checks)";
    if (r.passed) {
        for (const auto& line : r.lines) out << ": " << line;
        out << '\n';
    } else {
        out << "\n  first counterexample: " << r.counterexample << '\n';
    }
}

int run_verify(const std::string& suite, const CliConfig& cfg, std::ostream& out) {
    std::vector<SuiteReport> reports;
    const int max_n = static_cast<int>(cfg.max_n);
    if (suite == "all") {
        reports = verify_all(cfg.seed);
    } else if (suite == "adams") {
        reports.push_back(verify_adams(cfg.rank, max_n));
    } else if (suite == "graded-adams") {
        reports.push_back(verify_graded_adams(std::min(cfg.rank, 3), max_n));
    } else if (suite == "local-term") {
        reports.push_back(verify_local_term(3, std::min(max_n, 6), 6));
    } else if (suite == "lemma-scaling") {
        reports.push_back(verify_lemma_scaling(max_n));
    } else if (suite == "oracle-sym") {
        reports.push_back(verify_oracle_sym(cfg.seed, 20, std::min(max_n, 4)));
    } else if (suite == "delocalized") {
        reports.push_back(verify_delocalized(max_n));
    } else if (suite == "euler-brute") {
        reports.push_back(verify_euler_brute(max_n));
    } else if (suite == "rr-series") {
        reports.push_back(verify_rr_series(cfg.max_n));
    } else {
        throw std::invalid_argument("unknown verification suite '" + suite + "'");
    }
    bool ok = true;
    for (const auto& r : reports) {
        print_report(r, out);
        ok = ok && r.passed;
    }
    return ok ? 0 : static_cast<int>(ExitCode::verification_failed);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Genera of symmetric products and symmetric-group orbifolds"};
    app.require_subcommand(1);

    auto* series = app.add_subcommand("series", "Print a generating series");
    std::string flavor;
    series->add_option("flavor", flavor,
                       "euler-sym|euler-orb|chiy-sym|chiy-orb|chihat-sym|chihat-orb|rr-sym|rr-orb|rr-graded")
        ->required();
    series->add_option("--hodge", cfg.hodge_path, "Hodge diamond file");
    series->add_option("--chi", cfg.chi, "Euler number (euler-* flavors, instead of --hodge)");
    series->add_option("--model", cfg.model, "Model manifold p1^d or p^d (rr-* flavors)");
    series->add_option("--bundle", cfg.bundle, "Line bundle O(k) on the model");
    series->add_option("--lambda", cfg.lambda, "rr-graded on Lambda_{-y} of the cotangent or tangent bundle");
    series->add_option("--grade", cfg.grade, "rr-graded: degree of O(k) in O + O(k)");
    series->add_option("--max-n", cfg.max_n, "Highest printed power");
    series->add_option("--trunc", cfg.trunc, "Truncation order of the computation (>= max-n)");
    series->add_option("--format", cfg.format, "text|json|csv");
    series->add_option("--weight-convention", cfg.weight_convention, "positive-y|minus-y (with --method classes)");
    series->add_option("--method", cfg.method, "closed|classes (orbifold flavors)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    verify->add_option("suite", suite,
                       "adams|graded-adams|local-term|lemma-scaling|oracle-sym|delocalized|euler-brute|rr-series|all")
        ->required();
    verify->add_option("--seed", cfg.seed, "Seed for randomized suites");
    verify->add_option("--rank", cfg.rank, "Largest bundle rank (adams suites)");
    auto* verify_max_n = verify->add_option("--max-n", cfg.max_n, "Largest n");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::bad_input);
    }

    try {
        if (series->parsed()) {
            cfg.subcommand = "series " + flavor;
            return run_series(flavor, cfg, out, err);
        }
        cfg.subcommand = "verify " + suite;
        if (verify_max_n->count() == 0) {
            cfg.max_n = suite == "adams" ? 8 : suite == "graded-adams" || suite == "lemma-scaling" || suite == "delocalized" ? 6
                      : suite == "oracle-sym" ? 4 : suite == "rr-series" ? 8 : 5;
        }
        return run_verify(suite, cfg, out);
    } catch (const ParseError& e) {
        err << "error: malformed Hodge file: " << e.what() << '\n';
        return static_cast<int>(ExitCode::bad_input);
    } catch (const GuardViolation& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::guard_violation);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::guard_violation);
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << '\n';
        return static_cast<int>(ExitCode::verification_failed);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::bad_input);
    }
}

}  // namespace symgen
