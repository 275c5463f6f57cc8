#include "trireg/matching.hpp"

#include <algorithm>
#include <array>

#include "trireg/error.hpp"

namespace trireg {

namespace {

constexpr Monomial kVars[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

// Up-neighbour indices of each down triangle, in x, y, z order; -1 when
// the neighbour is not present.
std::vector<std::array<int, 3>> down_neighbours(const TriangularRegion& region) {
    std::vector<std::array<int, 3>> nb(region.down.size());
    for (std::size_t i = 0; i < region.down.size(); ++i) {
        for (int v = 0; v < 3; ++v) {
            nb[i][v] = region.up_index(region.down[i].times(kVars[v]));
        }
    }
    return nb;
}

struct Enumerator {
    const TriangularRegion& region;
    std::vector<std::array<int, 3>> nb;
    std::vector<int> order;          // down indices in descending grevlex
    std::vector<int> chosen;         // down index -> up index
    std::vector<bool> up_used;
    const std::function<bool(const Tiling&)>& visit;
    bool stopped = false;

    Enumerator(const TriangularRegion& r, const std::function<bool(const Tiling&)>& v)
        : region(r), nb(down_neighbours(r)), chosen(r.down.size(), -1),
          up_used(r.up.size(), false), visit(v) {
        order.resize(region.down.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int i, int j) {
            return grevlex_greater(region.down[i], region.down[j]);
        });
    }

    void emit() {
        std::vector<Lozenge> lozenges;
        lozenges.reserve(chosen.size());
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            lozenges.push_back(Lozenge{region.down[i], region.up[chosen[i]]});
        }
        if (!visit(make_tiling(std::move(lozenges)))) stopped = true;
    }

    void run(std::size_t pos) {
        if (stopped) return;
        if (pos == order.size()) {
            emit();
            return;
        }
        int di = order[pos];
        for (int v = 0; v < 3 && !stopped; ++v) {
            int ui = nb[di][v];
            if (ui < 0 || up_used[ui]) continue;
            up_used[ui] = true;
            chosen[di] = ui;
            run(pos + 1);
            chosen[di] = -1;
            up_used[ui] = false;
        }
    }
};

}  // namespace

IntMatrix biadjacency(const TriangularRegion& region) {
    IntMatrix z(static_cast<int>(region.down.size()), static_cast<int>(region.up.size()));
    for (std::size_t i = 0; i < region.down.size(); ++i) {
        for (const Monomial& var : kVars) {
            int j = region.up_index(region.down[i].times(var));
            if (j >= 0) z.at(static_cast<int>(i), j) = 1;
        }
    }
    return z;
}

void for_each_tiling(const TriangularRegion& region,
                     const std::function<bool(const Tiling&)>& visit) {
    if (region.up.size() != region.down.size()) return;
    if (region.empty()) {
        visit(Tiling{});
        return;
    }
    Enumerator e(region, visit);
    e.run(0);
}

std::vector<Tiling> enumerate_tilings(const TriangularRegion& region) {
    std::vector<Tiling> out;
    for_each_tiling(region, [&](const Tiling& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

BigInt count_tilings(const TriangularRegion& region) {
    if (region.up.size() != region.down.size()) return 0;
    if (region.empty()) return 1;
    auto nb = down_neighbours(region);
    std::size_t n = region.down.size();
    std::vector<bool> up_used(region.up.size(), false);
    std::vector<bool> down_done(n, false);
    BigInt total = 0;

    // Fail-first: always branch on the down triangle with the fewest free
    // neighbours left.
    auto recurse = [&](auto&& self, std::size_t remaining) -> void {
        if (remaining == 0) {
            ++total;
            return;
        }
        int best = -1, best_count = 4;
        for (std::size_t i = 0; i < n; ++i) {
            if (down_done[i]) continue;
            int count = 0;
            for (int v = 0; v < 3; ++v) {
                if (nb[i][v] >= 0 && !up_used[nb[i][v]]) ++count;
            }
            if (count < best_count) {
                best_count = count;
                best = static_cast<int>(i);
                if (count <= 1) break;
            }
        }
        if (best_count == 0) return;
        down_done[best] = true;
        for (int v = 0; v < 3; ++v) {
            int ui = nb[best][v];
            if (ui < 0 || up_used[ui]) continue;
            up_used[ui] = true;
            self(self, remaining - 1);
            up_used[ui] = false;
        }
        down_done[best] = false;
    };
    recurse(recurse, n);
    return total;
}

int matching_sign(const TriangularRegion& region, const Tiling& tiling) {
    return permutation_sign(tiling_permutation(region, tiling));
}

bool has_perfect_matching(const TriangularRegion& region) {
    if (region.up.size() != region.down.size()) return false;
    if (region.empty()) return true;
    auto nb = down_neighbours(region);
    std::size_t n = region.down.size();
    std::vector<int> match_up(region.up.size(), -1);
    std::vector<int> match_down(n, -1);
    std::vector<bool> visited(region.up.size(), false);

    auto augment = [&](auto&& self, int di) -> bool {
        for (int v = 0; v < 3; ++v) {
            int ui = nb[di][v];
            if (ui < 0 || visited[ui]) continue;
            visited[ui] = true;
            if (match_up[ui] < 0 || self(self, match_up[ui])) {
                match_up[ui] = di;
                match_down[di] = ui;
                return true;
            }
        }
        return false;
    };

    int matched = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(visited.begin(), visited.end(), false);
        if (augment(augment, static_cast<int>(i))) ++matched;
    }
    return matched == static_cast<int>(n);
}

}  // namespace trireg
