#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridwords/cutting2d.hpp"
#include "gridwords/errors.hpp"
#include "gridwords/surd.hpp"
#include "gridwords/word.hpp"

namespace gridwords {

// A line through the origin into the first octant, direction (dx, dy, dz),
// all components positive and in one quadratic field. Stored with dx
// normalized to 1.
class line3 {
public:
    line3(const surd& dx, const surd& dy, const surd& dz) {
        if (dx.sign() <= 0 || dy.sign() <= 0 || dz.sign() <= 0)
            throw non_positive("direction components must be positive");
        dy_ = dy / dx;
        dz_ = dz / dx;
        if (dy_.d() != 0 && dz_.d() != 0 && dy_.d() != dz_.d())
            throw incompatible_fields("direction mixes sqrt(" + dy_.d().str() + ") and sqrt(" +
                                      dz_.d().str() + ")");
    }

    const surd& dx() const { return dx_; }
    const surd& dy() const { return dy_; }
    const surd& dz() const { return dz_; }

    bigint field_d() const { return dy_.d() != 0 ? dy_.d() : dz_.d(); }

private:
    surd dx_{1};
    surd dy_{1};
    surd dz_{1};
};

inline line3 parse_line3(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw parse_error("a line needs three comma-separated components: " + text);
    return line3(parse_surd(parts[0]), parse_surd(parts[1]), parse_surd(parts[2]));
}

inline std::string to_string(const line3& line) {
    return to_string(line.dx()) + "," + to_string(line.dy()) + "," + to_string(line.dz());
}

enum class tie_order : std::uint8_t { ascending, descending };

// Walk the line from the origin (excluded) and record plane crossings in
// order: z = k (letter 0) at parameter k/dz, y = k (letter 1) at k/dy,
// x = k (letter 2) at k/dx. Coincident crossings emit their letters together,
// ascending by default. Comparisons are exact: k_i/c_i vs k_j/c_j reduces to
// the sign of a + b*sqrt(d) with integer a, b.
inline word generate_intersection(const line3& line, std::size_t n,
                                  tie_order order = tie_order::ascending) {
    if (n == 0) throw length_out_of_range("need at least one letter");
    const std::array<surd, 3> comp{line.dz(), line.dy(), line.dx()};
    const bigint d = line.field_d();
    std::array<bigint, 3> p, q, r, k;
    for (std::size_t i = 0; i < 3; ++i) {
        p[i] = comp[i].p();
        q[i] = comp[i].q();
        r[i] = comp[i].r();
        k[i] = 1;
    }
    // sign of k_i/c_i - k_j/c_j
    auto cmp_next = [&](std::size_t i, std::size_t j) {
        return detail::sign_linear(k[i] * r[i] * p[j] - k[j] * r[j] * p[i],
                                   k[i] * r[i] * q[j] - k[j] * r[j] * q[i], d);
    };
    std::vector<std::uint8_t> out;
    out.reserve(n + 2);
    while (out.size() < n) {
        std::array<std::uint8_t, 3> due{};
        std::size_t count = 1;
        due[0] = 0;
        for (std::uint8_t letter = 1; letter < 3; ++letter) {
            const int c = cmp_next(letter, due[0]);
            if (c < 0) {
                due[0] = letter;
                count = 1;
            } else if (c == 0) {
                due[count++] = letter;
            }
        }
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint8_t letter = order == tie_order::ascending ? due[i] : due[count - 1 - i];
            out.push_back(letter);
        }
        for (std::size_t i = 0; i < count; ++i) ++k[due[i]];
    }
    out.resize(n);
    return word(std::move(out), 3);
}

struct slope_triple {
    surd lambda_xy;  // dy/dx
    surd lambda_yz;  // dz/dy
    surd lambda_xz;  // dz/dx = lambda_xy * lambda_yz
};

inline slope_triple projection_slopes(const line3& line) {
    return {line.dy() / line.dx(), line.dz() / line.dy(), line.dz() / line.dx()};
}

// The 2D slope seen after deleting one letter, under the ascending relabeling
// of removal_projection: remove 0 -> dy/dx, remove 1 -> dz/dx, remove 2 -> dz/dy.
inline surd removed_letter_slope(const line3& line, std::uint8_t removed) {
    switch (removed) {
        case 0: return line.dy() / line.dx();
        case 1: return line.dz() / line.dx();
        case 2: return line.dz() / line.dy();
        default: throw letter_not_in_alphabet("removal letter must be 0, 1 or 2");
    }
}

struct spherical_angles {
    double theta = 0.0;      // azimuth, arctan(dy/dx)
    double phi_polar = 0.0;  // angle from the z axis
};

inline spherical_angles angles(const line3& line) {
    const double dx = line.dx().to_double();
    const double dy = line.dy().to_double();
    const double dz = line.dz().to_double();
    spherical_angles a;
    a.theta = std::atan2(dy, dx);
    a.phi_polar = std::acos(dz / std::sqrt(dx * dx + dy * dy + dz * dz));
    return a;
}

// The ternary word obtained from the Fibonacci word by rewriting every 00
// into 020, left to right. The Fibonacci word has no 000, so the rewrite is
// unambiguous; it only inserts letters, so n source letters suffice (one
// extra is read so no pair is cut at the boundary).
inline word s_m_word(std::size_t n) {
    if (n == 0) throw length_out_of_range("need at least one letter");
    const word fib = fibonacci_word(n + 1);
    std::vector<std::uint8_t> out;
    out.reserve(n + 2);
    std::size_t i = 0;
    while (out.size() < n && i < fib.size()) {
        if (fib[i] == 0 && i + 1 < fib.size() && fib[i + 1] == 0) {
            out.push_back(0);
            out.push_back(2);
            out.push_back(0);
            i += 2;
        } else {
            out.push_back(fib[i]);
            ++i;
        }
    }
    out.resize(n);
    return word(std::move(out), 3);
}

// The line whose intersection sequence s_m_word realizes: direction
// (1, phi, phi + 1), tie-free, projection slopes (phi, phi, phi + 1).
inline line3 l_m_line() {
    const surd phi = surd::phi();
    return line3(surd(1), phi, phi + surd(1));
}

// Prefix of the ternary word defined by t1 = 0, t2 = 01, t3 = 0102,
// t_{k+3} = t_{k+2} t_{k+1} t_k.
inline word tribonacci_word(std::size_t n) {
    if (n == 0) throw length_out_of_range("need at least one letter");
    std::vector<std::uint8_t> a{0}, b{0, 1}, c{0, 1, 0, 2};
    while (c.size() < n) {
        std::vector<std::uint8_t> next = c;
        next.insert(next.end(), b.begin(), b.end());
        next.insert(next.end(), a.begin(), a.end());
        a = std::move(b);
        b = std::move(c);
        c = std::move(next);
    }
    c.resize(n);
    return word(std::move(c), 3);
}

struct projection_finding {
    int removed_letter = -1;  // -1 when the finding spans all projections
    std::string rule;         // "block-form" or "slope-compatibility"
    std::vector<std::size_t> run_lengths;
    std::size_t iteration = 0;
};

struct verdict {
    bool consistent = false;
    std::optional<line3> direction;  // estimate (1, dy, dz) when consistent
    std::size_t depth_checked = 0;
    std::vector<projection_finding> violations;
};

namespace detail {

// recover_cf runs at least this deep when estimating slopes, so convergents
// carry far more precision than the 4/N acceptance band.
inline constexpr std::size_t classify_cf_depth = 64;

}  // namespace detail

// Depth-bounded test of "is w the intersection sequence of some line".
// Each removal projection must sustain the derivation process (single- or
// two-block structure at every level reached), and the three recovered
// slopes must satisfy the exact relation (dy/dx)(dz/dy) = dz/dx within 4/N,
// N the shortest projection. A passing verdict is evidence to the checked
// depth, not a proof; a failing one carries a machine-checkable witness.
inline verdict classify_linearity(const word& w, std::size_t depth) {
    if (w.alphabet() != 3)
        throw letter_not_in_alphabet("classification applies to ternary words");
    if (depth == 0) throw length_out_of_range("depth must be positive");
    if (w.size() < 100 * depth)
        throw too_short("need >= " + std::to_string(100 * depth) + " letters for depth " +
                        std::to_string(depth));

    verdict v;
    v.depth_checked = depth;
    const std::size_t effective = std::max(depth, detail::classify_cf_depth);

    std::array<word, 3> proj;
    std::array<cf_expansion, 3> cf;
    std::size_t min_len = w.size();
    for (std::uint8_t a = 0; a < 3; ++a) {
        proj[a] = removal_projection(w, a).projected;
        min_len = std::min(min_len, proj[a].size());
        try {
            cf[a] = recover_cf(proj[a], effective);
        } catch (const not_block_form& e) {
            v.violations.push_back({a, "block-form", e.witness_runs, e.iteration});
        }
    }
    if (!v.violations.empty()) return v;

    for (std::uint8_t a = 0; a < 3; ++a)
        if (cf[a].quotients.empty())
            throw too_short("projection without letter " + std::to_string(a) +
                            " is too short to estimate a slope");

    const surd est_xy = convergent(cf[0]);
    const surd est_xz = convergent(cf[1]);
    const surd est_yz = convergent(cf[2]);
    const surd gap = est_xy * est_yz - est_xz;
    const surd tol = surd::rational(4, bigint(min_len));
    if (cmp(gap < surd(0) ? -gap : gap, tol) > 0) {
        v.violations.push_back({-1, "slope-compatibility", {}, 0});
        return v;
    }
    v.consistent = true;
    v.direction = line3(surd(1), est_xy, est_xz);
    return v;
}

enum class recovery_rule : std::uint8_t { alternating_projection, doubled_letter };

struct line_recovery {
    line3 direction;
    recovery_rule rule;
    std::uint8_t letter;  // the alternating letter, or the doubled one
    surd lambda;          // the recovered projection slope
};

namespace detail {

inline bool strictly_alternating(const word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) return false;
    return true;
}

inline surd slope_from_projection(const word& proj) {
    cf_expansion cf;
    try {
        cf = recover_cf(proj, classify_cf_depth);
    } catch (const not_block_form&) {
        throw no_case_applies("projection does not sustain derivation");
    }
    if (cf.quotients.empty())
        throw no_case_applies("projection too short to estimate a slope");
    return convergent(cf);
}

inline line3 line_from_rates(const std::array<surd, 3>& rate_of_letter) {
    // letter 0 crosses z planes, 1 crosses y, 2 crosses x
    return line3(rate_of_letter[2], rate_of_letter[1], rate_of_letter[0]);
}

}  // namespace detail

// Reconstruct a line from a ternary word of minimal complexity (at most n+2
// for every tested n; exceeding it anywhere is the failure witness). Two
// structures are recognized. Case 1: some letter a alternates strictly with
// the rest; its crossing rate is then the sum of the other two, and the word
// with a removed fixes their ratio. Case 2: some letter A occurs doubled;
// the word must be A-runs separated by one fixed pair BC, B and C crossing
// in lockstep, and the word over {A, B} fixes A's rate. Anything else is
// reported, not guessed.
inline line_recovery line_from_min_complexity(const word& w) {
    if (w.alphabet() != 3)
        throw letter_not_in_alphabet("line recovery applies to ternary words");
    constexpr std::size_t n_checked = 30;
    if (w.size() < 50 * n_checked)
        throw margin_too_small(50 * n_checked,
                               "need >= " + std::to_string(50 * n_checked) +
                                   " letters to test complexity depth " +
                                   std::to_string(n_checked));
    for (std::size_t n = 1; n <= n_checked; ++n) {
        const std::size_t c = complexity(w, n);
        if (c > n + 2) throw not_min_complexity(n, c);
    }

    for (std::uint8_t a = 0; a < 3; ++a) {
        if (!detail::strictly_alternating(seq_projection(w, a))) continue;
        const surd lambda = detail::slope_from_projection(removal_projection(w, a).projected);
        const std::uint8_t lo = a == 0 ? 1 : 0;
        const std::uint8_t hi = a == 2 ? 1 : 2;
        std::array<surd, 3> rate{surd(1), surd(1), surd(1)};
        rate[a] = surd(1) + lambda;
        rate[lo] = lambda;
        rate[hi] = surd(1);
        return {detail::line_from_rates(rate), recovery_rule::alternating_projection, a, lambda};
    }

    int doubled = -1;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] != w[i + 1]) continue;
        if (doubled >= 0 && doubled != w[i]) throw no_case_applies("two letters occur doubled");
        doubled = w[i];
    }
    if (doubled < 0) throw no_case_applies("no alternating projection and no doubled letter");

    const auto big_a = static_cast<std::uint8_t>(doubled);
    // The word must read A^k BC A^k BC ... for one fixed pair BC.
    std::uint8_t b = 0, c = 0;
    bool pair_known = false;
    std::size_t i = 0;
    if (w[0] != big_a) throw no_case_applies("word does not open with the doubled letter");
    while (i < w.size()) {
        while (i < w.size() && w[i] == big_a) ++i;
        if (i >= w.size()) break;
        const std::uint8_t first = w[i++];
        if (pair_known && first != b) throw no_case_applies("separator pair is not fixed");
        if (i >= w.size()) break;  // truncated final separator
        const std::uint8_t second = w[i++];
        if (second == big_a || second == first)
            throw no_case_applies("separator is not a pair of the other two letters");
        if (pair_known && second != c) throw no_case_applies("separator pair is not fixed");
        b = first;
        c = second;
        pair_known = true;
        if (i < w.size() && w[i] != big_a)
            throw no_case_applies("separator longer than one pair");
    }
    if (!pair_known) throw no_case_applies("doubled letter never meets the other two");

    const surd mu =
        detail::slope_from_projection(removal_projection(w, c).projected);
    if (mu.sign() <= 0) throw no_case_applies("degenerate recovered slope");
    std::array<surd, 3> rate{surd(1), surd(1), surd(1)};
    rate[big_a] = big_a < b ? mu : mu.recip();
    return {detail::line_from_rates(rate), recovery_rule::doubled_letter, big_a,
            rate[big_a]};
}

}  // namespace gridwords
