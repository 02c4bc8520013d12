#include "bohr/interval_site.hpp"

#include <algorithm>

namespace bohr {

IntervalSite::IntervalSite(std::vector<Rational> grid_points) : grid(std::move(grid_points)) {
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (grid.size() < 2) throw InputError("interval site grid needs at least two points");
    for (int i = 0; i < int(grid.size()); ++i)
        for (int j = i + 1; j < int(grid.size()); ++j) pairs.push_back({i, j});
}

// Two midpoint levels so even adjacent grid pairs have strict subintervals.
static std::vector<Rational> refine_grid(const std::vector<Rational>& grid) {
    std::vector<Rational> fine = grid;
    for (int level = 0; level < 2; ++level) {
        std::vector<Rational> next;
        for (size_t i = 0; i + 1 < fine.size(); ++i) {
            next.push_back(fine[i]);
            next.push_back((fine[i] + fine[i + 1]) / 2);
        }
        next.push_back(fine.back());
        fine = std::move(next);
    }
    return fine;
}

int IntervalSite::index_of(const Rational& p, const Rational& q) const {
    for (size_t e = 0; e < pairs.size(); ++e)
        if (grid[pairs[e].first] == p && grid[pairs[e].second] == q) return int(e) + 1;
    return -1;
}

bool IntervalSite::leq(int x, int y) const {
    if (x == 0) return true;
    if (y == 0) return false;
    auto [px, qx] = pairs[x - 1];
    auto [py, qy] = pairs[y - 1];
    return py <= px && qx <= qy;  // (px,qx) contained in (py,qy)
}

bool IntervalSite::cover(int x, const Bits& u) const {
    if (x == 0) return true;
    const Rational p = grid[pairs[x - 1].first];
    const Rational q = grid[pairs[x - 1].second];

    const std::vector<Rational> fine = refine_grid(grid);
    std::vector<int> members = u.indices();
    for (size_t a = 0; a < fine.size(); ++a) {
        if (!(p < fine[a])) continue;
        for (size_t b = a + 1; b < fine.size(); ++b) {
            if (!(fine[b] < q)) break;
            bool hit = false;
            for (int m : members) {
                if (m == 0) continue;  // bottom covers nothing
                const Rational mp = grid[pairs[m - 1].first];
                const Rational mq = grid[pairs[m - 1].second];
                if (mp <= fine[a] && fine[b] <= mq) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        }
    }
    return true;
}

MeetSemilattice IntervalSite::semilattice() const {
    MeetSemilattice l;
    l.n = size();
    l.names.resize(l.n);
    l.names[0] = "bot";
    for (size_t e = 0; e < pairs.size(); ++e) {
        RationalInterval iv{grid[pairs[e].first], grid[pairs[e].second]};
        l.names[e + 1] = iv.str();
    }
    l.up.assign(l.n, Bits(l.n));
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y)
            if (leq(x, y)) l.up[x].set(y);
    l.meet.assign(l.n, std::vector<int>(l.n, 0));
    for (int x = 1; x < l.n; ++x)
        for (int y = 1; y < l.n; ++y) {
            int p = std::max(pairs[x - 1].first, pairs[y - 1].first);
            int q = std::min(pairs[x - 1].second, pairs[y - 1].second);
            l.meet[x][y] = p < q ? index_of(grid[p], grid[q]) : 0;
        }
    l.bottom = 0;
    l.top = index_of(grid.front(), grid.back());
    return l;
}

Site IntervalSite::site() const {
    Site s;
    s.base = semilattice();
    IntervalSite self = *this;
    s.covers = [self](int x, const Bits& u) { return self.cover(x, u); };
    return s;
}

bool interval_cover(const IntervalSite& s, int x, const Bits& u) { return s.cover(x, u); }

}  // namespace bohr
