#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "symgen/hodge.hpp"

namespace symgen {

// Hodge diamond file:
//
//   # comment
//   dim 1
//   theory hodge        (optional; "hodge" or "b-side")
//   1 0
//   0 1
//
// followed by d+1 rows of d+1 non-negative integers (row p, column q).
// Blank lines and '#' comments are ignored. Errors throw ParseError with
// the 1-based line and column of the offending token.
HodgeDiamond parse_hodge(std::string_view text);
HodgeDiamond read_hodge_file(const std::filesystem::path& path);

std::string format_hodge(const HodgeDiamond& h);

}  // namespace symgen
