#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridwords {

// Base class of every exception thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic on surds drawn from distinct quadratic fields (both irrational,
// different radicands). Rationals promote into either field and never trigger this.
struct incompatible_fields : error {
    using error::error;
};

struct division_by_zero : error {
    using error::error;
};

// A quantity that must be strictly positive was not.
struct non_positive : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

// Factor length / graph order outside [1, word length].
struct length_out_of_range : error {
    using error::error;
};

struct letter_not_in_alphabet : error {
    using error::error;
};

// An analysis window shorter than 50x the deepest requested depth.
struct margin_too_small : error {
    std::size_t required_length;
    margin_too_small(std::size_t required, const std::string& msg)
        : error(msg), required_length(required) {}
};

// Not enough complete blocks (or letters) to make the requested inference.
struct too_short : error {
    using error::error;
};

struct trivial_slope_one : error {
    using error::error;
};

struct empty_expansion : error {
    using error::error;
};

// A binary word whose interior run lengths are not {v} or {v, v+1}.
struct not_block_form : error {
    std::vector<std::size_t> witness_runs;  // distinct interior run lengths observed
    std::size_t iteration;                  // derivation round that failed (0 = input)

    not_block_form(std::vector<std::size_t> runs, std::size_t iter)
        : error(describe(runs, iter)), witness_runs(std::move(runs)), iteration(iter) {}

private:
    static std::string describe(const std::vector<std::size_t>& runs, std::size_t iter) {
        std::ostringstream os;
        os << "word is not in block form (iteration " << iter << "; interior runs {";
        for (std::size_t i = 0; i < runs.size(); ++i) os << (i ? "," : "") << runs[i];
        os << "})";
        return os.str();
    }
};

// Ternary word whose factor complexity is not n+2 at some tested n.
struct not_min_complexity : error {
    std::size_t failing_n;
    std::size_t observed;

    not_min_complexity(std::size_t n, std::size_t c)
        : error("complexity(w," + std::to_string(n) + ") = " + std::to_string(c) +
                ", expected " + std::to_string(n + 2)),
          failing_n(n), observed(c) {}
};

// Minimal-complexity word matching neither the alternating-projection case
// nor the doubled-letter block case.
struct no_case_applies : error {
    using error::error;
};

}  // namespace gridwords
