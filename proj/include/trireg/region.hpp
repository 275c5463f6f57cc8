#ifndef TRIREG_REGION_HPP
#define TRIREG_REGION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "trireg/ideal.hpp"
#include "trireg/monomial.hpp"

namespace trireg {

// An upward triangle of side `side` removed from the board, one per ideal
// generator of degree below d.
struct Puncture {
    Monomial generator;
    int side = 0;

    friend bool operator==(const Puncture&, const Puncture&) = default;
};

// The part of the side-d triangular board that survives removing the
// triangles labelled by monomials of the ideal.  `up` holds the present
// degree-(d-1) labels and `down` the present degree-(d-2) labels, both in
// descending lex order (top-to-bottom, left-to-right on the board); all
// matrix row/column indexing uses these orders.
struct TriangularRegion {
    int d = 0;
    Ideal ideal;
    std::vector<Monomial> up;
    std::vector<Monomial> down;
    std::vector<Puncture> punctures;

    bool has_up(const Monomial& m) const;
    bool has_down(const Monomial& m) const;

    // Index in the up/down vector, or -1.
    int up_index(const Monomial& m) const;
    int down_index(const Monomial& m) const;

    bool empty() const { return up.empty() && down.empty(); }
};

TriangularRegion build_region(int d, const Ideal& ideal);

// (#up, #down); equal means balanced, more downs means down-heavy.
std::pair<int, int> balance(const TriangularRegion& region);

inline bool is_balanced(const TriangularRegion& region) {
    return region.up.size() == region.down.size();
}

// The triangles of the region whose labels are divisible by m, i.e. the
// part of the region inside the side-(d - deg m) triangle at m's position.
struct MonomialSubregion {
    Monomial base;
    std::vector<Monomial> ups;
    std::vector<Monomial> downs;

    bool down_heavy() const { return downs.size() > ups.size(); }
};

MonomialSubregion monomial_subregion(const TriangularRegion& region, const Monomial& m);

// The subregion rescaled to its own board: side d - deg(m), ideal (I : m).
TriangularRegion subregion_as_region(const TriangularRegion& region, const Monomial& m);

enum class PunctureRelation { disjoint, touching, overlapping };

struct PunctureRelationEntry {
    int first = 0;   // indices into region.punctures
    int second = 0;
    PunctureRelation relation = PunctureRelation::disjoint;
    Monomial covering;  // gcd of the two generators
};

// Classification of every unordered pair of punctures by their closed
// triangular footprints: shared unit edge or triangle means overlapping,
// shared vertex only means touching.
std::vector<PunctureRelationEntry> puncture_relations(const TriangularRegion& region);

PunctureRelation puncture_relation(const Puncture& p, const Puncture& q);

// Region with the ideal rotated k times by 120 degrees.
TriangularRegion rotate(const TriangularRegion& region, int k);

// Side length of the puncture of `generator` on a side-d board, or nothing
// when the generator's degree is at least d (removes no triangle).
std::optional<int> puncture_side(int d, const Monomial& generator);

}  // namespace trireg

#endif
