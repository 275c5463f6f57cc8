#ifndef TRIREG_TILEABILITY_HPP
#define TRIREG_TILEABILITY_HPP

#include <optional>

#include "trireg/region.hpp"
#include "trireg/tiling.hpp"

namespace trireg {

// First monomial (descending grevlex scan over all degrees below d) whose
// subregion has strictly more downward than upward triangles, if any.
std::optional<Monomial> heavy_subregion(const TriangularRegion& region);

// The region is tileable iff it is balanced and no monomial subregion is
// down-heavy; the empty region counts as tileable.
bool is_tileable(const TriangularRegion& region);

// Deterministic tiling built by the recursive construction behind the
// tileability criterion: touching or overlapping punctures are first
// replaced by their minimal covering region (whose interior is tiled
// separately), then rows are tiled bottom-up, placing one stacked lozenge
// just right of each puncture gap except the farthest-right one.
// Throws Error(bad_input) when the region is not tileable.
Tiling canonical_tiling(const TriangularRegion& region);

}  // namespace trireg

#endif
