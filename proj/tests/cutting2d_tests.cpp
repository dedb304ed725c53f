#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gridwords/cutting2d.hpp"
#include "gridwords/surd.hpp"
#include "gridwords/word.hpp"

using gridwords::bigint;
using gridwords::block_form_report;
using gridwords::cf_expand;
using gridwords::cf_expansion;
using gridwords::check_block_form;
using gridwords::cutting_line;
using gridwords::derive;
using gridwords::fibonacci_word;
using gridwords::generate_cutting;
using gridwords::generate_from_cf;
using gridwords::is_sturmian_prefix;
using gridwords::recover_cf;
using gridwords::surd;
using gridwords::value_of;
using gridwords::word;

namespace {

// Oracle for rational slopes num/den: the m-th horizontal meets at x = m*den/num,
// the k-th vertical at x = k; merge by the integer comparison k*num vs m*den.
// Independent of the surd machinery.
std::string rational_cutting_oracle(long long num, long long den, std::size_t n) {
    std::string out;
    long long k = 1, m = 1;
    while (out.size() < n) {
        const long long lhs = k * num, rhs = m * den;
        if (lhs < rhs) {
            out.push_back('1');
            ++k;
        } else if (lhs > rhs) {
            out.push_back('0');
            ++m;
        } else {
            out += "10";
            ++k;
            ++m;
        }
    }
    out.resize(n);
    return out;
}

word cs(const surd& slope, std::size_t n) { return generate_cutting(cutting_line(slope), n); }

}  // namespace

TEST_CASE("golden-ratio cutting sequence matches the Fibonacci word") {
    CHECK(cs(surd::phi(), 19).to_digits() == "0100101001001010010");
    CHECK(fibonacci_word(19).to_digits() == "0100101001001010010");
    CHECK(cs(surd::phi(), 4000) == fibonacci_word(4000));
}

TEST_CASE("rational slopes match the integer-merge oracle") {
    CHECK(cs(surd(2), 12).to_digits() == rational_cutting_oracle(2, 1, 12));
    CHECK(cs(surd(2), 9).to_digits() == "010010010");
    CHECK(cs(surd(1), 8).to_digits() == "10101010");
    CHECK(cs(surd::rational(1, 3), 8).to_digits() == "11101110");

    std::mt19937 rng(1234);
    std::uniform_int_distribution<long long> pick(1, 40);
    for (int trial = 0; trial < 60; ++trial) {
        const long long num = pick(rng), den = pick(rng);
        CHECK(cs(surd::rational(num, den), 300).to_digits() ==
              rational_cutting_oracle(num, den, 300));
    }
}

TEST_CASE("rational slope gives a periodic word, full period num+den") {
    std::mt19937 rng(88);
    std::uniform_int_distribution<long long> pick(1, 15);
    for (int trial = 0; trial < 20; ++trial) {
        long long num = pick(rng), den = pick(rng);
        const long long g = std::gcd(num, den);
        num /= g;
        den /= g;
        const auto period = static_cast<std::size_t>(num + den);
        const word w = cs(surd::rational(num, den), 4 * period);
        for (std::size_t i = 0; i + period < w.size(); ++i) CHECK(w[i] == w[i + period]);
    }
}

TEST_CASE("slope rejection") {
    CHECK_THROWS_AS(cutting_line(surd(0)), gridwords::non_positive);
    CHECK_THROWS_AS(cutting_line(surd(-2)), gridwords::non_positive);
}

TEST_CASE("value of a line") {
    CHECK(value_of(cutting_line(surd::phi())) == 1);
    CHECK(value_of(cutting_line(surd::rational(7, 3))) == 2);
    CHECK(value_of(cutting_line(surd::rational(1, 3))) == 3);  // reciprocal reading below 1
    CHECK_THROWS_AS(value_of(cutting_line(surd(1))), gridwords::trivial_slope_one);
}

TEST_CASE("letter frequencies approach the slope") {
    const std::vector<surd> slopes{surd::phi(), surd(1, 1, 1, 2), surd::rational(7, 3),
                                   surd(0, 1, 1, 3)};
    for (const surd& lam : slopes) {
        const word w = cs(lam, 5000);
        double zeros = 0, ones = 0;
        for (std::size_t i = 0; i < w.size(); ++i) (w[i] == 0 ? zeros : ones) += 1;
        CHECK(std::abs(zeros / ones - lam.to_double()) <= 2.0 / ones);
    }
}

TEST_CASE("block form of known words") {
    const block_form_report fib = check_block_form(cs(surd::phi(), 500));
    CHECK(fib.kind == block_form_report::kind_t::two_block);
    CHECK(fib.majority == 0);
    CHECK(fib.value == 1);
    CHECK(fib.distinct_runs() == std::vector<std::size_t>{1, 2});

    const block_form_report two = check_block_form(cs(surd(2), 500));
    CHECK(two.kind == block_form_report::kind_t::single_block);
    CHECK(two.value == 2);

    const block_form_report below = check_block_form(cs(surd::rational(1, 3), 500));
    CHECK(below.majority == 1);
    CHECK(below.kind == block_form_report::kind_t::single_block);
    CHECK(below.value == 3);

    const block_form_report bad = check_block_form(word::from_digits("01001000010"));
    CHECK(bad.kind == block_form_report::kind_t::violation);
    CHECK(bad.distinct_runs() == std::vector<std::size_t>{2, 4});

    const block_form_report adjacent = check_block_form(word::from_digits("0011000"));
    CHECK(adjacent.kind == block_form_report::kind_t::violation);
}

TEST_CASE("derivation agrees with the reduced slope") {
    const surd phi = surd::phi();
    const word w = cs(phi, 2000);
    const auto d = derive(w);
    CHECK(d.value == 1);
    CHECK_FALSE(d.swapped);
    // reduced slope phi - 1, word letter-swapped since the slope drops below 1
    const word reduced = cs(phi - surd(1), 2000);
    const auto& dw = d.derived;
    const auto it = std::search(reduced.symbols().begin(), reduced.symbols().end(),
                                dw.symbols().begin(), dw.symbols().end());
    CHECK(it != reduced.symbols().end());
    CHECK(it == reduced.symbols().begin());  // from-origin derivation is exact

    const auto d2 = derive(word::from_digits("010010010"));
    CHECK(d2.value == 2);
    CHECK(d2.derived.to_digits() == "11");
    CHECK(d2.trimmed_front == 1);
    CHECK(d2.trimmed_back == 2);

    const auto d3 = derive(word::from_digits("0101"));
    CHECK(d3.value == 1);
    CHECK(d3.derived.to_digits() == "1");

    CHECK_THROWS_AS(derive(word::from_digits("01001000010")), gridwords::not_block_form);
}

TEST_CASE("derivation commutes with slope reduction for random quadratic slopes") {
    std::mt19937 rng(2468);
    std::uniform_int_distribution<int> small(1, 9);
    const std::vector<int> fields{2, 3, 5};
    for (int trial = 0; trial < 20; ++trial) {
        const surd lam(small(rng), small(rng), small(rng), fields[trial % 3]);
        if (cmp(lam, surd(1)) <= 0) continue;
        const word w = cs(lam, 1500);
        if (check_block_form(w).kind != block_form_report::kind_t::two_block) continue;
        const auto d = derive(w);
        CHECK(d.value == lam.floor());
        const word reduced = cs(lam - surd(lam.floor()), 1500);
        const auto& dw = d.derived;
        const auto it = std::search(reduced.symbols().begin(), reduced.symbols().end(),
                                    dw.symbols().begin(), dw.symbols().end());
        CHECK(it == reduced.symbols().begin());
    }
}

TEST_CASE("continued fraction recovery matches direct expansion") {
    const std::vector<surd> slopes{surd::phi(), surd(1, 1, 1, 2), surd::rational(7, 3),
                                   surd::rational(5, 2), surd(0, 1, 1, 3),
                                   surd::phi().recip(), surd::rational(3, 8)};
    for (const surd& lam : slopes) {
        const cf_expansion direct = cf_expand(lam, 8);
        const cf_expansion recovered = recover_cf(cs(lam, 10000), 8);
        const std::size_t k = std::min(direct.quotients.size(), recovered.quotients.size());
        REQUIRE(k >= std::min<std::size_t>(8, direct.quotients.size()));
        CHECK(std::vector<bigint>(direct.quotients.begin(), direct.quotients.begin() + k) ==
              std::vector<bigint>(recovered.quotients.begin(), recovered.quotients.begin() + k));
        if (direct.exact && direct.quotients.size() <= 8) {
            CHECK(recovered.exact);
            CHECK(recovered.quotients == direct.quotients);
        }
    }
}

TEST_CASE("recovery stops honestly on short data") {
    const cf_expansion r = recover_cf(word::from_digits("00000"), 8);
    CHECK(r.quotients.empty());
    CHECK_FALSE(r.exact);
    CHECK_THROWS_AS(recover_cf(word::from_digits("01001000010100100"), 8),
                    gridwords::not_block_form);
}

TEST_CASE("sturmian verdicts") {
    CHECK(is_sturmian_prefix(cs(surd::phi(), 3000), 50).pass);
    CHECK(is_sturmian_prefix(cs(surd(1, 1, 1, 2), 3000), 50).pass);

    const auto periodic = is_sturmian_prefix(cs(surd::rational(7, 3), 3000), 50);
    CHECK_FALSE(periodic.pass);
    CHECK(periodic.what_failed == "complexity");

    CHECK_THROWS_AS(is_sturmian_prefix(cs(surd::phi(), 100), 50), gridwords::margin_too_small);
}

TEST_CASE("substitution route reproduces the exact generator") {
    cf_expansion ones;
    ones.quotients.assign(12, bigint(1));
    CHECK(generate_from_cf(ones, 19).to_digits() == "0100101001001010010");

    cf_expansion two;
    two.quotients = {bigint(2)};
    CHECK(generate_from_cf(two, 12) == cs(surd(2), 12));

    cf_expansion seven_thirds;
    seven_thirds.quotients = {bigint(2), bigint(3)};
    CHECK(generate_from_cf(seven_thirds, 200) == cs(surd::rational(7, 3), 200));

    cf_expansion half;
    half.quotients = {bigint(0), bigint(2)};
    CHECK(generate_from_cf(half, 200) == cs(surd::rational(1, 2), 200));

    cf_expansion one_one;
    one_one.quotients = {bigint(1), bigint(1)};
    CHECK(generate_from_cf(one_one, 100) == cs(surd(2), 100));

    CHECK_THROWS_AS(generate_from_cf(cf_expansion{}, 5), gridwords::empty_expansion);
    cf_expansion zero;
    zero.quotients = {bigint(0)};
    CHECK_THROWS_AS(generate_from_cf(zero, 5), gridwords::non_positive);
}

TEST_CASE("substitution route converges to irrational generators on long prefixes") {
    // depth-14 truncation of [1;1,1,...] has convergent 987/610; the words for
    // the convergent and for phi itself agree far beyond 300 letters
    const cf_expansion phi_cf = cf_expand(surd::phi(), 14);
    CHECK(generate_from_cf(phi_cf, 300) == cs(surd::phi(), 300));
}
