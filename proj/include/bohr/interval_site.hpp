#pragma once

#include <vector>

#include "bohr/rational.hpp"
#include "bohr/site.hpp"

namespace bohr {

// The interval-domain site at finite rational granularity: element 0 is
// bottom, the rest are pairs (p,q) of grid rationals with p < q, ordered by
// inclusion. The covering decision quantifies over a midpoint refinement of
// the grid (two levels, so adjacent pairs still have strict subintervals);
// exact whenever all interval endpoints of interest lie on the grid.
struct IntervalSite {
    std::vector<Rational> grid;              // ascending, unique
    std::vector<std::pair<int, int>> pairs;  // element e>0 is (grid[i], grid[j])

    explicit IntervalSite(std::vector<Rational> grid_points);

    int size() const { return 1 + int(pairs.size()); }
    int index_of(const Rational& p, const Rational& q) const;  // -1 if absent
    bool leq(int x, int y) const;

    bool cover(int x, const Bits& u) const;

    MeetSemilattice semilattice() const;
    Site site() const;
};

bool interval_cover(const IntervalSite& s, int x, const Bits& u);

}  // namespace bohr
