#include "symgen/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include "symgen/errors.hpp"

namespace symgen {

std::uint64_t enumeration_cap(std::uint64_t default_cap) {
    const char* env = std::getenv("SYMGEN_MAX_CELLS");
    if (env == nullptr) return default_cap;
    std::uint64_t value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value == 0) return default_cap;
    return value < default_cap ? value : default_cap;
}

void check_enumeration(std::string_view what, std::uint64_t cells, std::uint64_t default_cap) {
    const std::uint64_t cap = enumeration_cap(default_cap);
    if (cells > cap) {
        throw GuardViolation(std::string(what) + ": " + std::to_string(cells) +
                             " cells exceed the enumeration limit " + std::to_string(cap));
    }
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent) {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (base != 0 && result > max / base) return max;
        result *= base;
    }
    return result;
}

}  // namespace symgen
