// Run the linearity classifier over three ternary words: one built from a
// line, one constructed combinatorially but still linear, and one that no
// line produces.

#include <iostream>

#include "gridwords/gridwords.hpp"

namespace {

void show(const char* name, const gridwords::word& w) {
    using namespace gridwords;
    std::cout << name << ": " << w.prefix(40).to_digits() << "...\n";
    const verdict v = classify_linearity(w, 6);
    if (v.consistent) {
        const line3& dir = *v.direction;
        std::cout << "  consistent with direction (" << to_string(dir.dx()) << ", "
                  << dir.dy().to_double() << ", " << dir.dz().to_double() << ")\n";
    } else {
        for (const auto& f : v.violations) {
            std::cout << "  " << f.rule << " violation";
            if (f.removed_letter >= 0)
                std::cout << " on the projection without letter " << f.removed_letter;
            std::cout << ", runs {";
            for (std::size_t i = 0; i < f.run_lengths.size(); ++i)
                std::cout << (i ? "," : "") << f.run_lengths[i];
            std::cout << "} at round " << f.iteration << "\n";
        }
    }
    const auto profile = degree_profile(build_rauzy(w, 4));
    std::cout << "  Rauzy order 4: " << profile.out_degrees.size() << " vertices, out-degrees";
    for (std::size_t d : profile.out_degrees) std::cout << " " << d;
    std::cout << "\n\n";
}

}  // namespace

int main() {
    using namespace gridwords;
    show("line (1, 1+sqrt(2), 3)", generate_intersection(
                                       line3(surd(1), surd(1, 1, 1, 2), surd(3)), 10000));
    show("rewritten Fibonacci word", s_m_word(10000));
    show("Tribonacci word", tribonacci_word(10000));
    return 0;
}
