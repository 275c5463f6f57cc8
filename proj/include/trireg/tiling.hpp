#ifndef TRIREG_TILING_HPP
#define TRIREG_TILING_HPP

#include <optional>
#include <vector>

#include "trireg/region.hpp"

namespace trireg {

// A lozenge covers a downward triangle and one of its three upward
// neighbours: up = x·down (stacked), y·down (up on the left) or
// z·down (up on the right).
struct Lozenge {
    Monomial down;
    Monomial up;

    friend bool operator==(const Lozenge&, const Lozenge&) = default;
};

enum class LozengeOrientation { x, y, z };

std::optional<LozengeOrientation> lozenge_orientation(const Lozenge& l);

// An exact cover of a region by lozenges, kept sorted by the down label in
// descending lex order so tilings compare by value.
struct Tiling {
    std::vector<Lozenge> lozenges;

    friend bool operator==(const Tiling&, const Tiling&) = default;
};

Tiling make_tiling(std::vector<Lozenge> lozenges);

// Every present triangle covered exactly once and every lozenge adjacent.
bool is_valid_tiling(const TriangularRegion& region, const Tiling& tiling);

// The matching permutation: entry i is the up-index (descending lex) that
// the i-th down triangle (descending lex) is paired with.
std::vector<int> tiling_permutation(const TriangularRegion& region, const Tiling& tiling);

int permutation_sign(const std::vector<int>& perm);

}  // namespace trireg

#endif
