#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace symgen {

enum class ExitCode : int {
    ok = 0,
    verification_failed = 1,
    bad_input = 2,
    guard_violation = 3,
};

struct CliConfig {
    std::string subcommand;  // "series <flavor>" or "verify <suite>"
    std::optional<std::string> hodge_path;
    std::optional<long> chi;
    std::string model = "p1^1";
    long bundle = 0;
    std::string lambda;  // "", "cotangent" or "tangent"
    int grade = 1;
    std::size_t max_n = 5;
    std::optional<std::size_t> trunc;
    std::string format = "text";
    std::string weight_convention = "positive-y";
    std::string method = "closed";
    std::uint64_t seed = 1;
    int rank = 4;
};

/// Parses argv (without the program name), runs the command and writes the
/// report to `out`, diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symgen
