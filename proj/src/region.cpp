#include "trireg/region.hpp"

#include <algorithm>
#include <set>

#include "trireg/error.hpp"
#include "trireg/geometry.hpp"

namespace trireg {

namespace {

int sorted_index(const std::vector<Monomial>& v, const Monomial& m) {
    auto it = std::lower_bound(v.begin(), v.end(), m, LexDescending{});
    if (it != v.end() && *it == m) return static_cast<int>(it - v.begin());
    return -1;
}

}  // namespace

bool TriangularRegion::has_up(const Monomial& m) const { return up_index(m) >= 0; }
bool TriangularRegion::has_down(const Monomial& m) const { return down_index(m) >= 0; }
int TriangularRegion::up_index(const Monomial& m) const { return sorted_index(up, m); }
int TriangularRegion::down_index(const Monomial& m) const { return sorted_index(down, m); }

TriangularRegion build_region(int d, const Ideal& ideal) {
    if (d < 1) fail_input("region side must be positive");
    TriangularRegion region;
    region.d = d;
    region.ideal = ideal;
    for (const Monomial& m : monomials_of_degree(d - 1)) {
        if (!ideal.contains(m)) region.up.push_back(m);
    }
    if (d >= 2) {
        for (const Monomial& m : monomials_of_degree(d - 2)) {
            if (!ideal.contains(m)) region.down.push_back(m);
        }
    }
    for (const Monomial& g : ideal.generators) {
        if (auto side = puncture_side(d, g)) {
            region.punctures.push_back(Puncture{g, *side});
        }
    }
    return region;
}

std::optional<int> puncture_side(int d, const Monomial& generator) {
    int side = d - generator.degree();
    if (side < 1) return std::nullopt;
    return side;
}

std::pair<int, int> balance(const TriangularRegion& region) {
    return {static_cast<int>(region.up.size()), static_cast<int>(region.down.size())};
}

MonomialSubregion monomial_subregion(const TriangularRegion& region, const Monomial& m) {
    MonomialSubregion sub;
    sub.base = m;
    for (const Monomial& u : region.up) {
        if (m.divides(u)) sub.ups.push_back(u);
    }
    for (const Monomial& w : region.down) {
        if (m.divides(w)) sub.downs.push_back(w);
    }
    return sub;
}

TriangularRegion subregion_as_region(const TriangularRegion& region, const Monomial& m) {
    if (m.degree() >= region.d) fail_input("subregion base degree must be below d");
    return build_region(region.d - m.degree(), colon(region.ideal, m));
}

namespace {

std::int64_t vertex_key(const Monomial& v) {
    return (static_cast<std::int64_t>(v.a) * 4096 + v.b) * 4096 + v.c;
}

// Unit edges (as sorted vertex-label pairs) and vertices of the closed
// footprint of a puncture: every edge and corner of its removed triangles.
struct Footprint {
    std::set<std::pair<std::int64_t, std::int64_t>> edges;
    std::set<std::int64_t> vertices;
};

void add_triangle(Footprint& f, const std::array<Monomial, 3>& vs) {
    std::int64_t k[3] = {vertex_key(vs[0]), vertex_key(vs[1]), vertex_key(vs[2])};
    for (int i = 0; i < 3; ++i) {
        f.vertices.insert(k[i]);
        for (int j = i + 1; j < 3; ++j) {
            f.edges.insert({std::min(k[i], k[j]), std::max(k[i], k[j])});
        }
    }
}

Footprint puncture_footprint(const Puncture& p) {
    Footprint f;
    int d = p.generator.degree() + p.side;
    for (const Monomial& m : monomials_of_degree(d - 1)) {
        if (p.generator.divides(m)) add_triangle(f, up_triangle_vertices(m));
    }
    for (const Monomial& m : monomials_of_degree(d - 2)) {
        if (p.generator.divides(m)) add_triangle(f, down_triangle_vertices(m));
    }
    return f;
}

template <typename Set>
bool intersects(const Set& a, const Set& b) {
    const Set& small = a.size() <= b.size() ? a : b;
    const Set& large = a.size() <= b.size() ? b : a;
    for (const auto& x : small) {
        if (large.count(x)) return true;
    }
    return false;
}

}  // namespace

PunctureRelation puncture_relation(const Puncture& p, const Puncture& q) {
    Footprint fp = puncture_footprint(p);
    Footprint fq = puncture_footprint(q);
    if (intersects(fp.edges, fq.edges)) return PunctureRelation::overlapping;
    if (intersects(fp.vertices, fq.vertices)) return PunctureRelation::touching;
    return PunctureRelation::disjoint;
}

std::vector<PunctureRelationEntry> puncture_relations(const TriangularRegion& region) {
    std::vector<PunctureRelationEntry> out;
    int n = static_cast<int>(region.punctures.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            PunctureRelationEntry e;
            e.first = i;
            e.second = j;
            e.relation = puncture_relation(region.punctures[i], region.punctures[j]);
            e.covering = gcd(region.punctures[i].generator, region.punctures[j].generator);
            out.push_back(e);
        }
    }
    return out;
}

TriangularRegion rotate(const TriangularRegion& region, int k) {
    return build_region(region.d, trireg::rotate(region.ideal, k));
}

}  // namespace trireg
