#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gridwords/errors.hpp"
#include "gridwords/surd.hpp"
#include "gridwords/word.hpp"

namespace gridwords {

// A line y = lambda * x through the origin with lambda > 0.
class cutting_line {
public:
    explicit cutting_line(surd slope) : slope_(std::move(slope)) {
        if (slope_.sign() <= 0) throw non_positive("cutting line needs a positive slope");
    }
    const surd& slope() const { return slope_; }

private:
    surd slope_;
};

// Walk the line from the origin (excluded) and record grid meetings in order:
// 0 for a horizontal line y = m, 1 for a vertical line x = k, and "10" when a
// lattice point delivers both at once. The k-th vertical sits at x = k, the
// m-th horizontal at x = m / lambda, so their order is the exact sign of
// k*lambda - m.
inline word generate_cutting(const cutting_line& line, std::size_t n) {
    const surd& lam = line.slope();
    std::vector<std::uint8_t> out;
    out.reserve(n + 1);
    bigint k = 1, m = 1;
    while (out.size() < n) {
        const int c = detail::sign_linear(k * lam.p() - m * lam.r(), k * lam.q(), lam.d());
        if (c < 0) {  // vertical first
            out.push_back(1);
            ++k;
        } else if (c > 0) {  // horizontal first
            out.push_back(0);
            ++m;
        } else {  // lattice point
            out.push_back(1);
            if (out.size() < n) out.push_back(0);
            ++k;
            ++m;
        }
    }
    return word(std::move(out), 2);
}

// floor(lambda) for lambda > 1, floor(1/lambda) for lambda < 1.
inline bigint value_of(const cutting_line& line) {
    const surd& lam = line.slope();
    const int against_one = cmp(lam, surd(1));
    if (against_one == 0) throw trivial_slope_one("value is undefined for slope 1");
    return against_one > 0 ? lam.floor() : lam.recip().floor();
}

// Interior run structure of a binary word: the runs of the majority letter
// strictly between consecutive occurrences of the minority letter. Leading
// and trailing truncated runs never participate.
struct block_form_report {
    enum class kind_t { single_block, two_block, violation };

    kind_t kind = kind_t::violation;
    std::uint8_t majority = 0;
    std::size_t value = 0;                       // v for {v} or {v, v+1}
    std::map<std::size_t, std::size_t> runs;     // interior run length -> count

    std::vector<std::size_t> distinct_runs() const {
        std::vector<std::size_t> out;
        out.reserve(runs.size());
        for (const auto& [len, cnt] : runs) out.push_back(len);
        return out;
    }
};

namespace detail {

// Majority = the letter that may repeat; the minority letter of a block-form
// word is always isolated. Ties (pure alternation, or both letters doubled)
// fall back to the more frequent letter, then to 0.
inline std::uint8_t majority_letter(const word& w) {
    std::size_t count[2] = {0, 0};
    bool doubled[2] = {false, false};
    for (std::size_t i = 0; i < w.size(); ++i) {
        ++count[w[i]];
        if (i + 1 < w.size() && w[i + 1] == w[i]) doubled[w[i]] = true;
    }
    if (doubled[0] != doubled[1]) return doubled[0] ? 0 : 1;
    if (count[0] != count[1]) return count[0] > count[1] ? 0 : 1;
    return 0;
}

}  // namespace detail

inline block_form_report check_block_form(const word& w) {
    if (w.alphabet() != 2)
        throw letter_not_in_alphabet("block form is defined for binary words");
    block_form_report rep;
    rep.majority = detail::majority_letter(w);
    const std::uint8_t minority = 1 - rep.majority;
    std::size_t prev = w.size();  // previous minority position, none yet
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != minority) continue;
        if (prev != w.size()) ++rep.runs[i - prev - 1];
        prev = i;
    }
    if (rep.runs.empty()) {
        rep.kind = block_form_report::kind_t::violation;  // constant or single-minority word
        return rep;
    }
    const std::size_t lo = rep.runs.begin()->first;
    const std::size_t hi = rep.runs.rbegin()->first;
    if (rep.runs.size() == 1 && lo >= 1) {
        rep.kind = block_form_report::kind_t::single_block;
        rep.value = lo;
    } else if (rep.runs.size() == 2 && hi == lo + 1 && lo >= 1) {
        rep.kind = block_form_report::kind_t::two_block;
        rep.value = lo;
    } else {
        rep.kind = block_form_report::kind_t::violation;
    }
    return rep;
}

// One derivation round. With majority letter 0 (slope above 1; a majority of
// 1 swaps letter roles first, the reciprocal-slope reading), every interior
// block 1 0^v maps to 1 and each leftover 0 beyond the v-th to 0. The word it
// produces is the cutting sequence of the slope reduced by v. The leading
// partial run and the final (possibly truncated) block are trimmed.
struct derivation {
    word derived;
    bigint value;
    bool swapped = false;
    std::size_t trimmed_front = 0;
    std::size_t trimmed_back = 0;
};

inline derivation derive(const word& w) {
    block_form_report rep = check_block_form(w);
    if (rep.kind == block_form_report::kind_t::violation)
        throw not_block_form(rep.distinct_runs(), 0);

    derivation out;
    out.swapped = rep.majority == 1;
    const std::uint8_t minority_raw = 1 - rep.majority;

    std::vector<std::size_t> minority_pos;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == minority_raw) minority_pos.push_back(i);
    if (minority_pos.size() < 2)
        throw too_short("no complete interior block to derive from");

    const std::size_t v = rep.value;
    std::vector<std::uint8_t> derived;
    derived.reserve(minority_pos.size());
    for (std::size_t b = 0; b + 1 < minority_pos.size(); ++b) {
        const std::size_t gap = minority_pos[b + 1] - minority_pos[b] - 1;
        derived.push_back(1);
        if (gap == v + 1) derived.push_back(0);
    }
    out.derived = word(std::move(derived), 2);
    out.value = v;
    out.trimmed_front = minority_pos.front();
    out.trimmed_back = w.size() - minority_pos[minority_pos.size() - 1];
    return out;
}

namespace detail {

inline std::size_t interior_block_count(const word& w, std::uint8_t minority) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == minority) ++c;
    return c == 0 ? 0 : c - 1;
}

}  // namespace detail

// Read the continued fraction of the slope straight off the word: the value
// of each derivation round is the next partial quotient. A word whose
// majority letter is 1 encodes a slope below 1, contributing a leading 0.
// A single-block round pins an integer slope at that level and completes the
// expansion (exact = true); running out of blocks or hitting the depth limit
// leaves it a prefix (exact = false). Fewer than 3 complete interior blocks
// are not trusted to vote.
inline cf_expansion recover_cf(const word& w, std::size_t depth) {
    cf_expansion out;
    word cur = w;
    for (std::size_t round = 0; out.quotients.size() < depth; ++round) {
        const std::uint8_t maj = detail::majority_letter(cur);
        if (detail::interior_block_count(cur, 1 - maj) < 3) break;
        block_form_report rep = check_block_form(cur);
        if (rep.kind == block_form_report::kind_t::violation)
            throw not_block_form(rep.distinct_runs(), round);
        if (round == 0 && rep.majority == 1) {
            out.quotients.push_back(0);  // slope below 1: [0; ...]
            if (out.quotients.size() == depth) break;
        }
        derivation d = derive(cur);
        out.quotients.push_back(d.value);
        if (rep.kind == block_form_report::kind_t::single_block) {
            out.exact = true;
            break;
        }
        cur = std::move(d.derived);
    }
    return out;
}

struct sturmian_report {
    bool pass = true;
    std::size_t first_failing_n = 0;
    std::string what_failed;
};

// Complexity n+1 at every depth up to n_max plus 1-balance. The margin rule
// requires 50 letters of data per unit of depth. Complexity n+1 up to n_max
// is itself the aperiodicity evidence: a word of period p plateaus at C(n) <= p.
inline sturmian_report is_sturmian_prefix(const word& w, std::size_t n_max) {
    if (n_max == 0) throw length_out_of_range("n_max must be positive");
    if (w.size() < 50 * n_max)
        throw margin_too_small(50 * n_max,
                               "need >= " + std::to_string(50 * n_max) + " letters for depth " +
                                   std::to_string(n_max) + ", have " + std::to_string(w.size()));
    sturmian_report rep;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (complexity(w, n) != n + 1) {
            rep.pass = false;
            rep.first_failing_n = n;
            rep.what_failed = "complexity";
            return rep;
        }
    }
    const auto deficit = balance_deficit(w, n_max);
    for (std::size_t a = 0; a < deficit.size(); ++a) {
        if (deficit[a] > 1) {
            rep.pass = false;
            rep.first_failing_n = n_max;
            rep.what_failed = "balance";
            return rep;
        }
    }
    return rep;
}

namespace detail {

// Crossing tokens: H = horizontal meeting (letter 0), V = vertical (letter 1),
// T = lattice tie (letters "10").
enum class tok : std::uint8_t { H, V, T };

// Token stream of the cutting sequence of an integer slope a >= 1:
// H^{a-1} (T H^{a-1})^inf, a tie at every vertical.
inline std::vector<tok> integer_slope_tokens(const bigint& a, std::size_t budget) {
    std::vector<tok> out;
    out.reserve(budget + 1);
    const bigint gap = a - 1;
    auto emit_h_run = [&](const bigint& len) {
        for (bigint i = 0; i < len && out.size() <= budget; ++i) out.push_back(tok::H);
    };
    emit_h_run(gap);
    while (out.size() <= budget) {
        out.push_back(tok::T);
        emit_h_run(gap);
    }
    return out;
}

// One inverse derivation level: from the stream of slope mu >= 1 to the
// stream of slope a + 1/mu. Crossing-by-crossing, the mirrored inner stream
// (V and H swap; ties stay ties) lists the fractional horizontals, each of
// which trails a full majority run: V -> H, H -> V H^a, T -> T H^a, with the
// leading partial run H^a restored in front.
inline std::vector<tok> unfold_level(const std::vector<tok>& inner, const bigint& a,
                                     std::size_t budget) {
    std::vector<tok> out;
    out.reserve(budget + 1);
    auto emit_h_run = [&]() {
        for (bigint i = 0; i < a && out.size() <= budget; ++i) out.push_back(tok::H);
    };
    emit_h_run();
    for (const tok t : inner) {
        if (out.size() > budget) break;
        switch (t) {
            case tok::V: out.push_back(tok::H); break;
            case tok::H:
                out.push_back(tok::V);
                emit_h_run();
                break;
            case tok::T:
                out.push_back(tok::T);
                emit_h_run();
                break;
        }
    }
    return out;
}

inline word render_tokens(const std::vector<tok>& toks, std::size_t n, bool mirrored) {
    std::vector<std::uint8_t> out;
    out.reserve(n);
    const std::uint8_t h = mirrored ? 1 : 0;
    const std::uint8_t v = mirrored ? 0 : 1;
    for (const tok t : toks) {
        if (out.size() >= n) break;
        switch (t) {
            case tok::H: out.push_back(h); break;
            case tok::V: out.push_back(v); break;
            case tok::T:
                out.push_back(1);  // a tie reads "10" in either orientation
                if (out.size() < n) out.push_back(0);
                break;
        }
    }
    if (out.size() < n)
        throw too_short("continued fraction too shallow to emit " + std::to_string(n) +
                        " letters");
    out.resize(n);
    return word(std::move(out), 2);
}

}  // namespace detail

// Rebuild a cutting sequence from a continued fraction by reversing the
// derivation substitution from the innermost quotient outward. Produces the
// from-origin word of the expansion's exact convergent, ties included; a
// leading quotient of 0 mirrors the slope into (0, 1).
inline word generate_from_cf(const cf_expansion& cf, std::size_t n) {
    if (cf.quotients.empty()) throw empty_expansion("no quotients to expand");
    std::size_t first = 0;
    bool mirrored = false;
    if (cf.quotients[0] == 0) {
        if (cf.quotients.size() == 1) throw non_positive("continued fraction [0] has slope 0");
        first = 1;
        mirrored = true;
    }
    for (std::size_t i = first; i < cf.quotients.size(); ++i)
        if (cf.quotients[i] <= 0)
            throw non_positive("partial quotients beyond the first must be positive");

    // Tokens only ever expand through a level, so a budget of n tokens at the
    // innermost level guarantees n letters at the outermost.
    const std::size_t budget = n + 2;
    std::vector<detail::tok> stream =
        detail::integer_slope_tokens(cf.quotients.back(), budget);
    for (std::size_t i = cf.quotients.size() - 1; i-- > first;)
        stream = detail::unfold_level(stream, cf.quotients[i], budget);
    return detail::render_tokens(stream, n, mirrored);
}

// Prefix of the Fibonacci word 0100101..., the fixed point of 0 -> 01, 1 -> 0.
inline word fibonacci_word(std::size_t n) {
    std::vector<std::uint8_t> cur{0};
    while (cur.size() < n) {
        std::vector<std::uint8_t> next;
        next.reserve(cur.size() * 2);
        for (std::uint8_t s : cur) {
            if (s == 0) {
                next.push_back(0);
                next.push_back(1);
            } else {
                next.push_back(0);
            }
        }
        cur = std::move(next);
    }
    cur.resize(n);
    return word(std::move(cur), 2);
}

}  // namespace gridwords
