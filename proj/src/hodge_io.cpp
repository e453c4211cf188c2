#include "symgen/hodge_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "symgen/errors.hpp"

namespace symgen {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::vector<Token> tokens;
    std::size_t number;  // 1-based
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const auto eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{{}, number};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
            if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (eol == std::string_view::npos) break;
    }
    return lines;
}

long parse_count(const Token& tok, std::size_t line, std::string_view what) {
    long value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(std::string(what) + " '" + std::string(tok.text) + "' is not an integer", line,
                         tok.column);
    }
    if (value < 0) {
        throw ParseError(std::string(what) + " must be non-negative", line, tok.column);
    }
    return value;
}

}  // namespace

HodgeDiamond parse_hodge(std::string_view text) {
    const auto lines = tokenize(text);
    std::size_t next = 0;
    if (lines.empty()) throw ParseError("empty Hodge file, expected 'dim <d>'", 1, 1);

    const Line& header = lines[next++];
    if (header.tokens[0].text != "dim") {
        throw ParseError("expected 'dim <d>'", header.number, header.tokens[0].column);
    }
    if (header.tokens.size() != 2) {
        throw ParseError("expected exactly one value after 'dim'", header.number,
                         header.tokens.size() > 2 ? header.tokens[2].column : header.tokens[0].column);
    }
    const long d = parse_count(header.tokens[1], header.number, "dimension");
    if (d > 64) throw ParseError("dimension too large", header.number, header.tokens[1].column);

    Theory theory = Theory::hodge;
    if (next < lines.size() && lines[next].tokens[0].text == "theory") {
        const Line& line = lines[next++];
        if (line.tokens.size() != 2) {
            throw ParseError("expected 'theory hodge|b-side'", line.number, line.tokens[0].column);
        }
        if (line.tokens[1].text == "hodge") {
            theory = Theory::hodge;
        } else if (line.tokens[1].text == "b-side") {
            theory = Theory::b_side;
        } else {
            throw ParseError("unknown theory '" + std::string(line.tokens[1].text) + "'", line.number,
                             line.tokens[1].column);
        }
    }

    const auto size = static_cast<std::size_t>(d) + 1;
    std::vector<std::vector<long>> h;
    for (std::size_t p = 0; p < size; ++p) {
        if (next >= lines.size()) {
            const std::size_t after = lines.back().number + 1;
            throw ParseError("expected " + std::to_string(size) + " matrix rows, found " + std::to_string(p),
                             after, 1);
        }
        const Line& line = lines[next++];
        if (line.tokens.size() != size) {
            const std::size_t col = line.tokens.size() > size ? line.tokens[size].column
                                                              : line.tokens.back().column + line.tokens.back().text.size();
            throw ParseError("row " + std::to_string(p) + " has " + std::to_string(line.tokens.size()) +
                                 " entries, expected " + std::to_string(size),
                             line.number, col);
        }
        std::vector<long> row;
        for (const auto& tok : line.tokens) row.push_back(parse_count(tok, line.number, "Hodge number"));
        h.push_back(std::move(row));
    }
    if (next < lines.size()) {
        throw ParseError("unexpected content after the matrix", lines[next].number, lines[next].tokens[0].column);
    }
    return HodgeDiamond(static_cast<int>(d), std::move(h), theory);
}

HodgeDiamond read_hodge_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open Hodge file '" + path.string() + "'", 0, 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_hodge(buffer.str());
}

std::string format_hodge(const HodgeDiamond& h) {
    std::ostringstream os;
    os << "dim " << h.dim() << "\ntheory " << to_string(h.theory()) << '\n';
    for (const auto& row : h.matrix()) {
        for (std::size_t q = 0; q < row.size(); ++q) os << (q ? " " : "") << row[q];
        os << '\n';
    }
    return os.str();
}

}  // namespace symgen
