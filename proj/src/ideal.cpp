#include "trireg/ideal.hpp"

#include <algorithm>

namespace trireg {

Ideal minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), GrevlexDescending{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& h : gens) {
            if (!(h == g) && h.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g);
    }
    return Ideal{std::move(kept)};
}

Ideal colon(const Ideal& ideal, const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators.size());
    for (const Monomial& g : ideal.generators) {
        gens.push_back(g.over(gcd(g, m)));
    }
    return minimalize(std::move(gens));
}

Ideal rotate(const Ideal& ideal, int k) {
    k = ((k % 3) + 3) % 3;
    std::vector<Monomial> gens = ideal.generators;
    for (int i = 0; i < k; ++i) {
        for (Monomial& g : gens) g = Monomial{g.c, g.a, g.b};
    }
    return minimalize(std::move(gens));
}

}  // namespace trireg
