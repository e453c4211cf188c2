#pragma once

#include <string>
#include <string_view>

#include "symgen/qseries.hpp"

namespace symgen {

enum class OutputFormat { text, json, csv };

OutputFormat parse_output_format(std::string_view name);

// Text: one line per power, "q^<k>: <terms>", terms in ascending y-power,
// e.g. "q^2: 1 + y^1/2 + y + y^3/2 + y^2". The variable name defaults to q.
std::string to_text(const QSeries& s, std::string_view variable = "q");

// JSON: {"variable":"q","trunc":N,"coefficients":[[[u_exp,"num/den"],...],...]}
std::string to_json(const QSeries& s, std::string_view variable = "q");
/// Inverse of to_json. Throws std::invalid_argument on schema violations.
QSeries from_json(std::string_view json);

// CSV: header "q_power,u_exp,numerator,denominator", one row per nonzero term.
std::string to_csv(const QSeries& s);

std::string format_series(const QSeries& s, OutputFormat format, std::string_view variable = "q");

}  // namespace symgen
