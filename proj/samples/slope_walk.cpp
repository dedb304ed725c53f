// Generate a cutting sequence, read its slope back off the word alone, and
// compare against the direct continued-fraction expansion.

#include <iostream>

#include "gridwords/gridwords.hpp"

int main() {
    using namespace gridwords;

    const surd slope(3, 1, 2, 5);  // (3 + sqrt(5)) / 2
    const word w = generate_cutting(cutting_line(slope), 20000);
    std::cout << "slope " << to_string(slope) << "\n";
    std::cout << "word  " << w.prefix(60).to_digits() << "...\n\n";

    word cur = w;
    for (int round = 0; round < 6; ++round) {
        const derivation d = derive(cur);
        std::cout << "round " << round << ": value " << d.value << ", "
                  << (d.swapped ? "letters swapped, " : "") << "derived length "
                  << d.derived.size() << "\n";
        cur = d.derived;
    }

    const cf_expansion direct = cf_expand(slope, 10);
    const cf_expansion recovered = recover_cf(w, 10);
    std::cout << "\ncf from the surd: ";
    for (const auto& q : direct.quotients) std::cout << q << " ";
    std::cout << "\ncf from the word: ";
    for (const auto& q : recovered.quotients) std::cout << q << " ";
    std::cout << "\nconvergent of the recovered prefix: "
              << to_string(convergent(recovered)) << " ~ "
              << convergent(recovered).to_double() << "\n";
    return 0;
}
