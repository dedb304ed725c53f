#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gridwords/errors.hpp"

namespace gridwords {

// Finite word over {0,1} or {0,1,2}. Symbols are stored as raw byte values
// (not ASCII); the declared alphabet size is carried alongside so analyses
// know which letters may occur even when some never do.
class word {
public:
    word() = default;

    word(std::vector<std::uint8_t> symbols, int alphabet)
        : sym_(std::move(symbols)), alphabet_(static_cast<std::uint8_t>(alphabet)) {
        if (alphabet < 2 || alphabet > 3)
            throw letter_not_in_alphabet("alphabet size must be 2 or 3");
        for (std::uint8_t s : sym_)
            if (s >= alphabet_)
                throw letter_not_in_alphabet("symbol " + std::to_string(int(s)) +
                                             " outside alphabet of size " + std::to_string(alphabet));
    }

    // Parse a digit string. alphabet = 0 infers the smallest alphabet (>= 2)
    // containing every digit seen.
    static word from_digits(std::string_view digits, int alphabet = 0) {
        std::vector<std::uint8_t> syms;
        syms.reserve(digits.size());
        int max_seen = 0;
        for (char c : digits) {
            if (c < '0' || c > '2')
                throw parse_error(std::string("word digit out of range: '") + c + "'");
            syms.push_back(static_cast<std::uint8_t>(c - '0'));
            max_seen = std::max(max_seen, c - '0');
        }
        return word(std::move(syms), alphabet ? alphabet : std::max(2, max_seen + 1));
    }

    std::size_t size() const { return sym_.size(); }
    bool empty() const { return sym_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return sym_[i]; }
    int alphabet() const { return alphabet_; }
    const std::vector<std::uint8_t>& symbols() const { return sym_; }

    // Raw bytes, for windowed hashing.
    std::string_view bytes() const {
        return {reinterpret_cast<const char*>(sym_.data()), sym_.size()};
    }

    word sub(std::size_t pos, std::size_t len) const {
        return word(std::vector<std::uint8_t>(sym_.begin() + pos, sym_.begin() + pos + len),
                    alphabet_);
    }

    word prefix(std::size_t len) const { return sub(0, len); }

    std::string to_digits() const {
        std::string out;
        out.reserve(sym_.size());
        for (std::uint8_t s : sym_) out.push_back(static_cast<char>('0' + s));
        return out;
    }

    // Factor identity is positionwise symbol equality; the declared alphabet
    // does not participate.
    bool operator==(const word& o) const { return sym_ == o.sym_; }
    bool operator<(const word& o) const { return sym_ < o.sym_; }

private:
    std::vector<std::uint8_t> sym_;
    std::uint8_t alphabet_ = 2;
};

namespace detail {

// Distinct length-n windows in first-occurrence order. Deduplication hashes
// window content and the set confirms candidates by exact byte equality.
inline std::vector<std::string_view> distinct_windows(const word& w, std::size_t n) {
    if (n < 1 || n > w.size())
        throw length_out_of_range("factor length " + std::to_string(n) +
                                  " outside [1, " + std::to_string(w.size()) + "]");
    const std::string_view all = w.bytes();
    std::unordered_set<std::string_view> seen;
    seen.reserve(w.size() - n + 2);
    std::vector<std::string_view> out;
    for (std::size_t i = 0; i + n <= all.size(); ++i) {
        const auto v = all.substr(i, n);
        if (seen.insert(v).second) out.push_back(v);
    }
    return out;
}

inline word word_of_view(std::string_view v, int alphabet) {
    std::vector<std::uint8_t> syms(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) syms[i] = static_cast<std::uint8_t>(v[i]);
    return word(std::move(syms), alphabet);
}

}  // namespace detail

// Distinct factors of length n, lexicographically sorted.
inline std::vector<word> factors(const word& w, std::size_t n) {
    auto views = detail::distinct_windows(w, n);
    std::sort(views.begin(), views.end());
    std::vector<word> out;
    out.reserve(views.size());
    for (auto v : views) out.push_back(detail::word_of_view(v, w.alphabet()));
    return out;
}

// Factor complexity C(w, n): number of distinct length-n factors.
inline std::size_t complexity(const word& w, std::size_t n) {
    return detail::distinct_windows(w, n).size();
}

// Per-letter balance deficit over all pairs of equal-length factors with
// length <= n: max |u|_a - min |u|_a, maximised over lengths. Index = letter.
inline std::vector<std::size_t> balance_deficit(const word& w, std::size_t n) {
    if (n < 1 || n > w.size())
        throw length_out_of_range("balance depth out of range");
    const int sigma = w.alphabet();
    // prefix[a][i] = occurrences of a in the first i letters
    std::vector<std::vector<std::uint32_t>> prefix(sigma,
                                                   std::vector<std::uint32_t>(w.size() + 1, 0));
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (int a = 0; a < sigma; ++a)
            prefix[a][i + 1] = prefix[a][i] + (w[i] == a ? 1 : 0);
    }
    std::vector<std::size_t> deficit(sigma, 0);
    for (std::size_t m = 1; m <= n; ++m) {
        for (int a = 0; a < sigma; ++a) {
            std::uint32_t lo = UINT32_MAX, hi = 0;
            const auto& pa = prefix[a];
            for (std::size_t i = 0; i + m <= w.size(); ++i) {
                const std::uint32_t c = pa[i + m] - pa[i];
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
            deficit[a] = std::max(deficit[a], static_cast<std::size_t>(hi - lo));
        }
    }
    return deficit;
}

// Number of distinct palindromic factors of length n.
inline std::size_t palindrome_count(const word& w, std::size_t n) {
    std::size_t count = 0;
    for (auto v : detail::distinct_windows(w, n)) {
        bool pal = true;
        for (std::size_t i = 0, j = v.size() - 1; i < j; ++i, --j)
            if (v[i] != v[j]) {
                pal = false;
                break;
            }
        if (pal) ++count;
    }
    return count;
}

inline word reverse(const word& w) {
    std::vector<std::uint8_t> syms(w.symbols().rbegin(), w.symbols().rend());
    return word(std::move(syms), w.alphabet());
}

// Sequential projection: a -> 0, every other letter -> 1. Length is preserved.
inline word seq_projection(const word& w, std::uint8_t a) {
    if (a >= w.alphabet())
        throw letter_not_in_alphabet("projection letter outside alphabet");
    std::vector<std::uint8_t> syms(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) syms[i] = w[i] == a ? 0 : 1;
    return word(std::move(syms), 2);
}

// Removal projection: delete every a, relabel the surviving letters in
// ascending order onto {0, 1}. letter_map[new] = original letter (0xFF when
// the source alphabet had nothing to map there).
struct removal_projection_result {
    word projected;
    std::array<std::uint8_t, 2> letter_map;
};

inline removal_projection_result removal_projection(const word& w, std::uint8_t a) {
    if (a >= w.alphabet())
        throw letter_not_in_alphabet("removal letter outside alphabet");
    std::array<std::uint8_t, 2> map{0xFF, 0xFF};
    std::array<std::uint8_t, 3> relabel{0xFF, 0xFF, 0xFF};
    std::uint8_t next = 0;
    const auto sigma = static_cast<std::uint8_t>(std::min(w.alphabet(), 3));
    for (std::uint8_t letter = 0; letter < sigma; ++letter) {
        if (letter == a) continue;
        relabel[letter] = next;
        if (next < map.size()) map[next] = letter;
        ++next;
    }
    std::vector<std::uint8_t> syms;
    syms.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != a) syms.push_back(relabel[w[i]]);
    return {word(std::move(syms), 2), map};
}

// --- compact form --------------------------------------------------------------

struct run {
    std::uint8_t letter;
    std::size_t length;
    bool operator==(const run&) const = default;
};

inline std::vector<run> runs_of(const word& w) {
    std::vector<run> out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        out.push_back({w[i], j - i});
        i = j;
    }
    return out;
}

// Power representation of a word. A word that is a whole number (>= 2) of
// copies of one block compresses to a single (block, exponent) pair detected
// on the run list; anything else falls back to per-run pairs, the classical
// digit-power display.
struct compact_form {
    struct piece {
        word block;
        std::size_t exponent;
    };
    std::vector<piece> pieces;
    int alphabet = 2;
};

inline compact_form compact(const word& w) {
    compact_form out;
    out.alphabet = w.alphabet();
    if (w.empty()) return out;
    const auto runs = runs_of(w);
    for (std::size_t s = 1; s * 2 <= runs.size(); ++s) {
        if (runs.size() % s != 0) continue;
        bool periodic = true;
        for (std::size_t i = s; i < runs.size() && periodic; ++i)
            periodic = runs[i] == runs[i % s];
        if (!periodic) continue;
        std::size_t block_len = 0;
        for (std::size_t i = 0; i < s; ++i) block_len += runs[i].length;
        out.pieces.push_back({w.prefix(block_len), runs.size() / s});
        return out;
    }
    std::size_t pos = 0;
    for (const auto& r : runs) {
        out.pieces.push_back({w.sub(pos, 1), r.length});
        pos += r.length;
    }
    return out;
}

inline word expand(const compact_form& c) {
    std::vector<std::uint8_t> syms;
    for (const auto& piece : c.pieces)
        for (std::size_t k = 0; k < piece.exponent; ++k)
            syms.insert(syms.end(), piece.block.symbols().begin(), piece.block.symbols().end());
    return word(std::move(syms), c.alphabet);
}

// Text format: whitespace-separated blocks with caret exponents, e.g.
// "0^2 1 0^2 1"; multi-letter blocks are parenthesised, e.g. "(100)^3".
inline std::string to_string(const compact_form& c) {
    std::string out;
    for (const auto& piece : c.pieces) {
        if (!out.empty()) out += ' ';
        if (piece.block.size() == 1)
            out += piece.block.to_digits();
        else
            out += "(" + piece.block.to_digits() + ")";
        if (piece.exponent != 1) out += "^" + std::to_string(piece.exponent);
    }
    return out;
}

inline compact_form parse_compact(std::string_view text, int alphabet = 0) {
    compact_form out;
    int max_seen = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::string digits;
        if (text[i] == '(') {
            ++i;
            while (i < text.size() && text[i] != ')') digits.push_back(text[i++]);
            if (i >= text.size()) throw parse_error("unclosed '(' in compact form");
            ++i;
        } else {
            digits.push_back(text[i++]);
        }
        std::size_t expo = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw parse_error("missing exponent after '^'");
            expo = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                expo = expo * 10 + static_cast<std::size_t>(text[i++] - '0');
            if (expo == 0) throw parse_error("compact-form exponent must be positive");
        }
        for (char ch : digits) max_seen = std::max(max_seen, ch - '0');
        out.pieces.push_back({word::from_digits(digits, 3), expo});
    }
    out.alphabet = alphabet ? alphabet : std::max(2, max_seen + 1);
    // Re-normalise block alphabets to the final inference.
    for (auto& piece : out.pieces)
        piece.block = word(piece.block.symbols(), out.alphabet);
    return out;
}

}  // namespace gridwords
