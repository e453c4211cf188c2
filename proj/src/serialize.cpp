#include "symgen/serialize.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace symgen {

using json = nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string to_text(const QSeries& s, std::string_view variable) {
    std::ostringstream os;
    for (std::size_t k = 0; k <= s.trunc(); ++k) {
        os << variable << '^' << k << ": " << s[k].to_string() << '\n';
    }
    return os.str();
}

std::string to_json(const QSeries& s, std::string_view variable) {
    json coefficients = json::array();
    for (const auto& c : s.coefficients()) {
        json terms = json::array();
        for (const auto& [e, r] : c.terms()) terms.push_back(json::array({e, r.to_fraction_string()}));
        coefficients.push_back(std::move(terms));
    }
    json doc;
    doc["variable"] = std::string(variable);
    doc["trunc"] = s.trunc();
    doc["coefficients"] = std::move(coefficients);
    return doc.dump();
}

QSeries from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("series JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("trunc") || !doc.contains("coefficients") ||
        !doc["trunc"].is_number_unsigned() || !doc["coefficients"].is_array()) {
        throw std::invalid_argument("series JSON: expected object with 'trunc' and 'coefficients'");
    }
    const auto trunc = doc["trunc"].get<std::size_t>();
    const auto& rows = doc["coefficients"];
    if (rows.size() != trunc + 1) {
        throw std::invalid_argument("series JSON: coefficient count does not match trunc + 1");
    }
    std::vector<YPolynomial> coeffs;
    coeffs.reserve(rows.size());
    for (const auto& row : rows) {
        if (!row.is_array()) throw std::invalid_argument("series JSON: coefficient must be an array");
        YPolynomial p;
        for (const auto& term : row) {
            if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
                !term[1].is_string()) {
                throw std::invalid_argument("series JSON: term must be [u_exp, \"num/den\"]");
            }
            p += YPolynomial::u_monomial(Rational::parse(term[1].get<std::string>()),
                                         term[0].get<int>());
        }
        coeffs.push_back(std::move(p));
    }
    return QSeries(trunc, std::move(coeffs));
}

std::string to_csv(const QSeries& s) {
    std::ostringstream os;
    os << "q_power,u_exp,numerator,denominator\n";
    for (std::size_t k = 0; k <= s.trunc(); ++k) {
        for (const auto& [e, r] : s[k].terms()) {
            os << k << ',' << e << ',' << r.numerator().get_str() << ','
               << r.denominator().get_str() << '\n';
        }
    }
    return os.str();
}

std::string format_series(const QSeries& s, OutputFormat format, std::string_view variable) {
    switch (format) {
        case OutputFormat::text: return to_text(s, variable);
        case OutputFormat::json: return to_json(s, variable) + "\n";
        case OutputFormat::csv: return to_csv(s);
    }
    return {};
}

}  // namespace symgen
