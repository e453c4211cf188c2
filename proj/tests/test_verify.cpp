#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "symgen/cli.hpp"
#include "symgen/verify.hpp"

using namespace symgen;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SYMGEN_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("series output in text form") {
    const auto r = invoke({"series", "chiy-sym", "--hodge", data("p1.hodge"), "--max-n", "3", "--format", "text"});
    CHECK(r.status == 0);
    CHECK(r.out == "q^0: 1\nq^1: 1 + y\nq^2: 1 + y + y^2\nq^3: 1 + y + y^2 + y^3\n");

    const auto euler = invoke({"series", "euler-orb", "--chi", "0", "--max-n", "5"});
    CHECK(euler.status == 0);
    CHECK(euler.out == "q^0: 1\nq^1: 0\nq^2: 0\nq^3: 0\nq^4: 0\nq^5: 0\n");

    const auto bside = invoke({"series", "chihat-sym", "--hodge", data("p1_bside.hodge"), "--max-n", "2"});
    CHECK(bside.status == 0);
    CHECK(bside.out == "q^0: 1\nq^1: 1 - 3*y\nq^2: 1 - 3*y + 3*y^2\n");
}

TEST_CASE("series output in JSON and CSV") {
    const auto json = invoke({"series", "chiy-orb", "--hodge", data("p1.hodge"), "--max-n", "2", "--format", "json"});
    CHECK(json.status == 0);
    const auto parsed = nlohmann::ordered_json::parse(json.out);
    CHECK(parsed["variable"] == "q");
    CHECK(parsed["trunc"] == 2);
    CHECK(parsed["coefficients"][2].size() == 5);
    CHECK(parsed.dump() + "\n" == json.out);

    const auto csv = invoke({"series", "euler-sym", "--chi", "2", "--max-n", "1", "--format", "csv"});
    CHECK(csv.status == 0);
    CHECK(csv.out == "q_power,u_exp,numerator,denominator\n0,0,1,1\n1,0,2,1\n");
}

TEST_CASE("delocalized method and weight conventions") {
    const auto closed = invoke({"series", "chiy-orb", "--hodge", data("p1.hodge"), "--max-n", "4"});
    const auto classes =
        invoke({"series", "chiy-orb", "--hodge", data("p1.hodge"), "--max-n", "4", "--method", "classes"});
    CHECK(classes.status == 0);
    CHECK(classes.out == closed.out);
    const auto minus = invoke({"series", "chiy-orb", "--hodge", data("p1.hodge"), "--max-n", "2", "--method",
                               "classes", "--weight-convention", "minus-y"});
    CHECK(minus.status == 3);
    CHECK_FALSE(minus.err.empty());
}

TEST_CASE("Riemann-Roch series") {
    const auto sym = invoke({"series", "rr-sym", "--model", "p1^1", "--bundle", "1", "--max-n", "4"});
    CHECK(sym.status == 0);
    CHECK(sym.out == "p^0: 1\np^1: 2\np^2: 3\np^3: 4\np^4: 5\n");
    const auto orb = invoke({"series", "rr-orb", "--model", "p1^1", "--bundle", "0", "--max-n", "5"});
    CHECK(orb.out == "p^0: 1\np^1: 1\np^2: 2\np^3: 3\np^4: 5\np^5: 7\n");
    const auto graded = invoke({"series", "rr-graded", "--model", "p1^1", "--lambda", "cotangent", "--max-n", "2"});
    CHECK(graded.status == 0);
    CHECK(graded.out == "p^0: 1\np^1: 1 + y\np^2: 1 + y + y^2\n");
}

TEST_CASE("input errors and guards map to exit codes") {
    const auto entry = invoke({"series", "chiy-sym", "--hodge", data("bad_entry.hodge"), "--max-n", "2"});
    CHECK(entry.status == 2);
    CHECK(entry.err.find("line 3") != std::string::npos);
    CHECK(entry.err.find("column 3") != std::string::npos);
    const auto shape = invoke({"series", "chiy-sym", "--hodge", data("bad_shape.hodge"), "--max-n", "2"});
    CHECK(shape.status == 2);
    CHECK(invoke({"series", "chiy-sym", "--hodge", data("missing.hodge")}).status == 2);
    CHECK(invoke({"series", "chiy-sym", "--hodge", data("p1_bside.hodge")}).status == 2);
    CHECK(invoke({"series", "nonsense", "--chi", "1"}).status == 2);
    CHECK(invoke({"series", "euler-sym", "--chi", "1", "--format", "xml"}).status == 2);
    CHECK(invoke({"series", "euler-sym", "--chi", "1", "--max-n", "6", "--trunc", "4"}).status == 2);
    CHECK(invoke({"verify", "euler-brute", "--max-n", "9"}).status == 3);
    CHECK(invoke({"series", "rr-sym", "--model", "p1^9", "--bundle", "1"}).status == 3);
    CHECK(invoke({"verify", "unknown"}).status == 2);
}

TEST_CASE("verification suites") {
    const auto adams = invoke({"verify", "adams", "--rank", "2", "--max-n", "6"});
    CHECK(adams.status == 0);
    CHECK(adams.out.find("all orbit traces zero") != std::string::npos);

    CHECK(verify_adams(3, 5).passed);
    CHECK(verify_graded_adams(2, 4, 2).passed);
    CHECK(verify_local_term(2, 3, 4).passed);
    CHECK(verify_lemma_scaling(3).passed);
    CHECK(verify_delocalized(4).passed);
    CHECK(verify_euler_brute(4).passed);
    CHECK(verify_rr_series(5).passed);

    const auto a = verify_oracle_sym(7, 5, 3);
    const auto b = verify_oracle_sym(7, 5, 3);
    CHECK(a.passed);
    CHECK(a.lines == b.lines);
    CHECK(a.checks == b.checks);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    const auto first = invoke({"verify", "oracle-sym", "--seed", "11"});
    const auto second = invoke({"verify", "oracle-sym", "--seed", "11"});
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
}
