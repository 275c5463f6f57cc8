#ifndef TRIREG_MATCHING_HPP
#define TRIREG_MATCHING_HPP

#include <functional>

#include "trireg/matrix.hpp"
#include "trireg/region.hpp"
#include "trireg/tiling.hpp"

namespace trireg {

// Zero-one bi-adjacency matrix of the region's honeycomb graph: rows are
// downward triangles, columns upward ones, both in descending lex order;
// entry 1 means the triangles share an edge.  Defined for unbalanced
// regions too, where it is not square.
IntMatrix biadjacency(const TriangularRegion& region);

// Visits every tiling exactly once in a deterministic order: the
// backtracking branches over downward triangles in descending grevlex
// order and tries up-neighbours as x·b, y·b, z·b.  An unbalanced region
// yields nothing; an empty region yields the single empty tiling.
// Returning false from the visitor stops the enumeration.
void for_each_tiling(const TriangularRegion& region,
                     const std::function<bool(const Tiling&)>& visit);

std::vector<Tiling> enumerate_tilings(const TriangularRegion& region);

// Number of tilings, counted with a fail-first pivot (fewest remaining
// neighbours) instead of the fixed enumeration order.
BigInt count_tilings(const TriangularRegion& region);

// Sign of the matching permutation attached to the tiling.
int matching_sign(const TriangularRegion& region, const Tiling& tiling);

// Independent maximum-matching test (augmenting paths on the honeycomb
// graph); true iff a perfect matching exists.  Serves as the oracle for
// the tileability criterion.
bool has_perfect_matching(const TriangularRegion& region);

}  // namespace trireg

#endif
