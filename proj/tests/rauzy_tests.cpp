#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "gridwords/cutting2d.hpp"
#include "gridwords/intersect3d.hpp"
#include "gridwords/rauzy.hpp"
#include "gridwords/word.hpp"

using gridwords::build_rauzy;
using gridwords::complexity;
using gridwords::cutting_line;
using gridwords::degree_profile;
using gridwords::generate_cutting;
using gridwords::rauzy_graph;
using gridwords::s_m_word;
using gridwords::surd;
using gridwords::to_dot;
using gridwords::tribonacci_word;
using gridwords::word;

namespace {

std::size_t count_lines(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("single-vertex self-loop") {
    const rauzy_graph g = build_rauzy(word::from_digits("000000"), 1);
    REQUIRE(g.vertices.size() == 1);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].from == 0);
    CHECK(g.edges[0].to == 0);
    CHECK(g.edges[0].letter == 0);
    CHECK(g.dangling.empty());

    const auto prof = degree_profile(g);
    CHECK(prof.out_degrees == std::vector<std::size_t>{1});
    CHECK(prof.in_degrees == std::vector<std::size_t>{1});

    const std::string dot = to_dot(g);
    CHECK(count_lines(dot, "\"0\";") == 1);
    CHECK(count_lines(dot, "->") == 1);
}

TEST_CASE("counts follow complexity") {
    const word sm = s_m_word(5000);
    const rauzy_graph g2 = build_rauzy(sm, 2);
    CHECK(g2.vertices.size() == 4);
    CHECK(g2.edges.size() == 5);

    const word fib = generate_cutting(cutting_line(surd::phi()), 3000);
    const rauzy_graph g3 = build_rauzy(fib, 3);
    CHECK(g3.vertices.size() == 4);
    CHECK(g3.edges.size() == 5);

    for (std::size_t n : {1, 2, 5, 9}) {
        const rauzy_graph g = build_rauzy(sm, n);
        CHECK(g.vertices.size() == complexity(sm, n));
        CHECK(g.edges.size() == complexity(sm, n + 1));
        const auto prof = degree_profile(g);
        std::size_t total = 0;
        for (std::size_t d : prof.out_degrees) total += d;
        CHECK(total == g.edges.size());
    }
}

TEST_CASE("minimal-complexity words branch at exactly one vertex") {
    const word sm = s_m_word(20000);
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto prof = degree_profile(build_rauzy(sm, n));
        REQUIRE(prof.out_degrees.size() == n + 2);
        for (std::size_t i = 0; i + 1 < prof.out_degrees.size(); ++i)
            CHECK(prof.out_degrees[i] == 1);
        CHECK(prof.out_degrees.back() == 2);
    }
}

TEST_CASE("tribonacci branches three ways at a single vertex") {
    const auto prof = degree_profile(build_rauzy(tribonacci_word(20000), 5));
    REQUIRE(prof.out_degrees.size() == 11);  // 2n+1
    CHECK(std::count(prof.out_degrees.begin(), prof.out_degrees.end(), std::size_t{3}) == 1);
    CHECK(std::count(prof.out_degrees.begin(), prof.out_degrees.end(), std::size_t{1}) == 10);
}

TEST_CASE("dangling vertices are reported, not hidden") {
    // 00 occurs only at the very end, so it has no observed extension
    const rauzy_graph g = build_rauzy(word::from_digits("0100"), 2);
    REQUIRE(g.dangling.size() == 1);
    CHECK(g.vertices[g.dangling[0]].to_digits() == "00");
}

TEST_CASE("order bounds") {
    const word w = word::from_digits("000000");
    CHECK_THROWS_AS(build_rauzy(w, 0), gridwords::length_out_of_range);
    CHECK_THROWS_AS(build_rauzy(w, 6), gridwords::length_out_of_range);
    CHECK(build_rauzy(w, 5).vertices.size() == 1);
}

TEST_CASE("dot export is deterministic and complete") {
    const word sm = s_m_word(5000);
    const std::string once = to_dot(build_rauzy(sm, 2));
    const std::string twice = to_dot(build_rauzy(sm, 2));
    CHECK(once == twice);
    CHECK(count_lines(once, "->") == 5);
    // 4 vertex lines: each declared once, quoted, terminated by ;
    std::size_t vertex_lines = 0;
    for (const std::string label : {"\"01\";", "\"02\";", "\"10\";", "\"20\";"})
        vertex_lines += count_lines(once, label);
    CHECK(vertex_lines == 4);
}
