#ifndef TRIREG_GEOMETRY_HPP
#define TRIREG_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "trireg/monomial.hpp"

namespace trireg {

// Exact planar coordinates on the triangular grid.  A grid vertex labelled
// by the degree-d monomial x^α y^β z^γ sits in row α (from the bottom) at
// offset γ from the upper-left edge; its Cartesian position is
// (γ + α/2, α·√3/2) in edge units.  Points are stored at 6x scale so that
// vertices, edge midpoints and triangle centroids are all integral (the
// vertical unit is √3/2, kept implicit).
struct Pt {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Pt&, const Pt&) = default;
};

inline Pt vertex_point(const Monomial& v) {
    return Pt{6 * (2 * static_cast<std::int64_t>(v.c) + v.a), 6 * static_cast<std::int64_t>(v.a)};
}

inline Pt midpoint(const Pt& p, const Pt& q) {
    return Pt{(p.x + q.x) / 2, (p.y + q.y) / 2};
}

// Vertex labels of an upward triangle (apex, base-left, base-right are
// x·m, y·m, z·m) and of a downward one (xy·m, xz·m, yz·m).
std::array<Monomial, 3> up_triangle_vertices(const Monomial& m);
std::array<Monomial, 3> down_triangle_vertices(const Monomial& m);

Pt up_triangle_centroid(const Monomial& m);
Pt down_triangle_centroid(const Monomial& m);

// Midpoint of the upper-left edge of up-triangle m; the lattice point used
// for lattice paths, shared with the downward triangle m/z when c(m) > 0.
Pt lattice_point(const Monomial& m);

// Exact crossing-number test; the point must not lie on the boundary.
bool point_in_polygon(const Pt& p, const std::vector<Pt>& polygon);

}  // namespace trireg

#endif
