#ifndef TRIREG_IDEAL_HPP
#define TRIREG_IDEAL_HPP

#include <vector>

#include "trireg/monomial.hpp"

namespace trireg {

// A monomial ideal given by its minimal generating set, kept sorted in
// descending grevlex order.
struct Ideal {
    std::vector<Monomial> generators;

    bool contains(const Monomial& m) const {
        for (const Monomial& g : generators) {
            if (g.divides(m)) return true;
        }
        return false;
    }

    bool empty() const { return generators.empty(); }
};

// Drops generators divisible by another, deduplicates, sorts descending
// grevlex.  The result is the canonical form of the ideal.
Ideal minimalize(std::vector<Monomial> gens);

// Colon ideal (I : m), generated by g / gcd(g, m) over the generators of I.
Ideal colon(const Ideal& ideal, const Monomial& m);

// Cyclic variable substitution applied k times; one application maps
// exponents (a, b, c) to (c, a, b), the 120-degree rotation of the board
// taking the top corner to the bottom-left one.
Ideal rotate(const Ideal& ideal, int k);

}  // namespace trireg

#endif
