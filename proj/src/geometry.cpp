#include "trireg/geometry.hpp"

namespace trireg {

std::array<Monomial, 3> up_triangle_vertices(const Monomial& m) {
    return {Monomial{m.a + 1, m.b, m.c}, Monomial{m.a, m.b + 1, m.c},
            Monomial{m.a, m.b, m.c + 1}};
}

std::array<Monomial, 3> down_triangle_vertices(const Monomial& m) {
    return {Monomial{m.a + 1, m.b + 1, m.c}, Monomial{m.a + 1, m.b, m.c + 1},
            Monomial{m.a, m.b + 1, m.c + 1}};
}

static Pt centroid3(const std::array<Monomial, 3>& vs) {
    Pt p0 = vertex_point(vs[0]), p1 = vertex_point(vs[1]), p2 = vertex_point(vs[2]);
    return Pt{(p0.x + p1.x + p2.x) / 3, (p0.y + p1.y + p2.y) / 3};
}

Pt up_triangle_centroid(const Monomial& m) { return centroid3(up_triangle_vertices(m)); }
Pt down_triangle_centroid(const Monomial& m) { return centroid3(down_triangle_vertices(m)); }

Pt lattice_point(const Monomial& m) {
    Pt base_left = vertex_point(Monomial{m.a, m.b + 1, m.c});
    Pt apex = vertex_point(Monomial{m.a + 1, m.b, m.c});
    return midpoint(base_left, apex);
}

bool point_in_polygon(const Pt& p, const std::vector<Pt>& polygon) {
    bool inside = false;
    std::size_t n = polygon.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Pt& v1 = polygon[j];
        const Pt& v2 = polygon[i];
        if ((v2.y > p.y) != (v1.y > p.y)) {
            std::int64_t den = v1.y - v2.y;
            std::int64_t num = (v1.x - v2.x) * (p.y - v2.y);
            std::int64_t lhs = (p.x - v2.x) * den;
            if (den > 0 ? lhs < num : lhs > num) inside = !inside;
        }
    }
    return inside;
}

}  // namespace trireg
