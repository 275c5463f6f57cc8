#include "trireg/tiling.hpp"

#include <algorithm>

#include "trireg/error.hpp"

namespace trireg {

std::optional<LozengeOrientation> lozenge_orientation(const Lozenge& l) {
    if (l.up == l.down.times({1, 0, 0})) return LozengeOrientation::x;
    if (l.up == l.down.times({0, 1, 0})) return LozengeOrientation::y;
    if (l.up == l.down.times({0, 0, 1})) return LozengeOrientation::z;
    return std::nullopt;
}

Tiling make_tiling(std::vector<Lozenge> lozenges) {
    std::sort(lozenges.begin(), lozenges.end(), [](const Lozenge& a, const Lozenge& b) {
        return lex_greater(a.down, b.down);
    });
    return Tiling{std::move(lozenges)};
}

bool is_valid_tiling(const TriangularRegion& region, const Tiling& tiling) {
    if (tiling.lozenges.size() != region.down.size()) return false;
    if (region.up.size() != region.down.size()) return false;
    std::vector<bool> up_used(region.up.size(), false);
    std::vector<bool> down_used(region.down.size(), false);
    for (const Lozenge& l : tiling.lozenges) {
        if (!lozenge_orientation(l)) return false;
        int ui = region.up_index(l.up);
        int di = region.down_index(l.down);
        if (ui < 0 || di < 0 || up_used[ui] || down_used[di]) return false;
        up_used[ui] = true;
        down_used[di] = true;
    }
    return true;
}

std::vector<int> tiling_permutation(const TriangularRegion& region, const Tiling& tiling) {
    std::vector<int> perm(region.down.size(), -1);
    for (const Lozenge& l : tiling.lozenges) {
        int di = region.down_index(l.down);
        int ui = region.up_index(l.up);
        if (di < 0 || ui < 0 || perm[di] != -1) {
            fail_internal("tiling does not match region");
        }
        perm[di] = ui;
    }
    for (int v : perm) {
        if (v < 0) fail_internal("tiling does not cover every downward triangle");
    }
    return perm;
}

int permutation_sign(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    int sign = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace trireg
