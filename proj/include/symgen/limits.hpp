#pragma once

#include <cstdint>
#include <string_view>

namespace symgen {

/// Effective cap for an enumeration whose built-in cap is `default_cap`.
/// SYMGEN_MAX_CELLS, when set to a positive integer, can only lower it.
std::uint64_t enumeration_cap(std::uint64_t default_cap);

/// Throws GuardViolation when `cells` exceeds enumeration_cap(default_cap).
void check_enumeration(std::string_view what, std::uint64_t cells, std::uint64_t default_cap);

/// base^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent);

}  // namespace symgen
