#include "symgen/ktheory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "symgen/limits.hpp"
#include "symgen/partitions.hpp"

namespace symgen {

namespace {

int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

// (-y)^k as a Laurent polynomial, k >= 0.
YPolynomial minus_y_power(int k) { return YPolynomial::y_monomial(parity_sign(k), k); }

const LineSymbol& letter(const LineSum& lines, int j) {
    return lines.at(static_cast<std::size_t>(j - 1));
}

void check_lines(const LineSum& lines) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].id == lines[j].id) throw std::invalid_argument("LineSum: duplicate line id");
        }
    }
}

}  // namespace

KClass KClass::from_lines(const LineSum& lines) {
    check_lines(lines);
    KClass k;
    for (const auto& l : lines) k.add({{l.id, 1}}, YPolynomial(1));
    return k;
}

void KClass::add(const KMonomial& monomial, const YPolynomial& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KClass& KClass::operator+=(const KClass& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, c);
    return *this;
}

std::string KClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!(c == YPolynomial(1))) os << '(' << c.to_string() << ")*";
        for (std::size_t i = 0; i < m.size(); ++i) {
            os << (i ? "*" : "") << 'L' << m[i].first;
            if (m[i].second != 1) os << '^' << m[i].second;
        }
        if (m.empty()) os << '1';
    }
    return os.str();
}

KMonomial word_monomial(const LineSum& lines, const std::vector<int>& word) {
    std::map<int, int> exps;
    for (int j : word) ++exps[letter(lines, j).id];
    return {exps.begin(), exps.end()};
}

KClass adams(const LineSum& lines, int n) {
    if (n < 1) throw std::invalid_argument("adams: n must be >= 1");
    check_lines(lines);
    KClass k;
    for (const auto& l : lines) k.add({{l.id, n}}, YPolynomial(1));
    return k;
}

KClass graded_adams(const LineSum& lines, int n, bool minus_y_weights) {
    if (n < 1) throw std::invalid_argument("graded_adams: n must be >= 1");
    check_lines(lines);
    KClass k;
    for (const auto& l : lines) {
        YPolynomial c(parity_sign(static_cast<long>(n - 1) * l.degree));
        if (minus_y_weights) c *= minus_y_power(n * l.degree);
        k.add({{l.id, n}}, c);
    }
    return k;
}

int koszul_shift_sign(const LineSum& lines, const std::vector<int>& word) {
    if (word.empty()) return 1;
    long others = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) others += letter(lines, word[i]).degree;
    return parity_sign(static_cast<long>(letter(lines, word.back()).degree) * others);
}

KClass phi_cycle_tensor(const LineSum& lines, int n, bool graded, bool minus_y_weights) {
    if (n < 1) throw std::invalid_argument("phi_cycle_tensor: n must be >= 1");
    check_lines(lines);
    const auto r = static_cast<int>(lines.size());
    KClass out;
    if (r == 0) return out;
    check_enumeration("phi_cycle_tensor", saturating_pow(static_cast<std::uint64_t>(r), static_cast<unsigned>(n)),
                      1'000'000);
    std::vector<int> word(static_cast<std::size_t>(n), 1);
    while (true) {
        // Diagonal entry of the shift at this basis word.
        if (cyclic_shift(word) == word) {
            YPolynomial entry(graded ? koszul_shift_sign(lines, word) : 1);
            if (minus_y_weights) {
                int degree = 0;
                for (int j : word) degree += letter(lines, j).degree;
                entry *= minus_y_power(degree);
            }
            out.add(word_monomial(lines, word), entry);
        }
        int pos = n - 1;
        while (pos >= 0 && word[static_cast<std::size_t>(pos)] == r) word[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0) break;
        ++word[static_cast<std::size_t>(pos)];
    }
    return out;
}

CharacterReport character_orbit_check(const LineSum& lines, int n, bool graded) {
    check_lines(lines);
    const auto r = static_cast<int>(lines.size());
    CharacterReport report;
    if (r == 0) return report;
    check_enumeration("character_orbit_check", saturating_pow(static_cast<std::uint64_t>(r), static_cast<unsigned>(n)),
                      100'000);
    for (const auto& orbit : orbit_decomposition_on_words(r, n)) {
        const int l = orbit.length;
        // shift(w_k) = sign_k * w_{k+1 mod l}; the block is a signed cyclic permutation matrix.
        std::vector<std::vector<int>> block(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l), 0));
        std::vector<int> w = orbit.representative;
        int holonomy = 1;
        for (int k = 0; k < l; ++k) {
            const int sign = graded ? koszul_shift_sign(lines, w) : 1;
            block[static_cast<std::size_t>((k + 1) % l)][static_cast<std::size_t>(k)] += sign;
            holonomy *= sign;
            w = cyclic_shift(w);
        }
        int trace = 0;
        for (int k = 0; k < l; ++k) trace += block[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        if (l > 1 && trace != 0) report.nonfixed_traces_vanish = false;
        // shift^n = (shift^l)^{n/l} acts by holonomy^{n/l}.
        if (((n / l) % 2 == 1) && holonomy != 1) report.action_consistent = false;
        report.orbits.push_back({orbit.representative, l, trace, holonomy});
    }
    return report;
}

LineSum ungraded_lines(int r) {
    LineSum lines;
    for (int i = 1; i <= r; ++i) lines.push_back({i, 0});
    return lines;
}

LineSum graded_lines(const std::vector<int>& degrees) {
    LineSum lines;
    for (std::size_t i = 0; i < degrees.size(); ++i) lines.push_back({static_cast<int>(i) + 1, degrees[i]});
    return lines;
}

}  // namespace symgen
