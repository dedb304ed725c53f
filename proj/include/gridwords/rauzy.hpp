#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gridwords/errors.hpp"
#include "gridwords/word.hpp"

namespace gridwords {

// Directed graph on the length-n factors of a word: an edge (bv, va, a)
// for every factor bva of length n+1. Vertex count is complexity(w, n),
// edge count complexity(w, n+1). Vertices are kept sorted; edges refer to
// them by index and are sorted themselves, so exports are deterministic.
struct rauzy_graph {
    struct edge {
        std::size_t from;
        std::size_t to;
        std::uint8_t letter;
    };

    std::size_t order = 0;
    std::vector<word> vertices;
    std::vector<edge> edges;
    std::vector<std::size_t> dangling;  // vertices with no observed extension
};

inline rauzy_graph build_rauzy(const word& w, std::size_t n) {
    if (n == 0 || n + 1 > w.size())
        throw length_out_of_range("Rauzy order must satisfy 1 <= n and n + 1 <= length");
    rauzy_graph g;
    g.order = n;
    g.vertices = factors(w, n);
    auto index_of = [&](const word& v) {
        return static_cast<std::size_t>(
            std::lower_bound(g.vertices.begin(), g.vertices.end(), v) - g.vertices.begin());
    };
    for (const word& f : factors(w, n + 1)) {
        rauzy_graph::edge e;
        e.from = index_of(f.sub(0, n));
        e.to = index_of(f.sub(1, n));
        e.letter = f[n];
        g.edges.push_back(e);
    }
    std::vector<bool> extended(g.vertices.size(), false);
    for (const auto& e : g.edges) extended[e.from] = true;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (!extended[i]) g.dangling.push_back(i);
    return g;
}

struct degree_profile_report {
    std::vector<std::size_t> out_degrees;  // sorted ascending
    std::vector<std::size_t> in_degrees;   // sorted ascending
};

inline degree_profile_report degree_profile(const rauzy_graph& g) {
    degree_profile_report rep;
    std::vector<std::size_t> out(g.vertices.size(), 0), in(g.vertices.size(), 0);
    for (const auto& e : g.edges) {
        ++out[e.from];
        ++in[e.to];
    }
    rep.out_degrees = std::move(out);
    rep.in_degrees = std::move(in);
    std::sort(rep.out_degrees.begin(), rep.out_degrees.end());
    std::sort(rep.in_degrees.begin(), rep.in_degrees.end());
    return rep;
}

inline std::string to_dot(const rauzy_graph& g) {
    std::string out = "digraph rauzy {\n";
    for (const word& v : g.vertices) {
        out += "  \"";
        out += v.to_digits();
        out += "\";\n";
    }
    for (const auto& e : g.edges) {
        out += "  \"";
        out += g.vertices[e.from].to_digits();
        out += "\" -> \"";
        out += g.vertices[e.to].to_digits();
        out += "\" [label=\"";
        out += static_cast<char>('0' + e.letter);
        out += "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace gridwords
