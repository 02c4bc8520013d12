#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bohr/lattice.hpp"

namespace bohr {

// A finite site: meet-semilattice plus covering relation x <| U.
struct Site {
    MeetSemilattice base;
    std::function<bool(int, const Bits&)> covers;
};

// The canonical join-cover x <| U iff x <= \/U on a finite lattice.
Site join_cover_site(const FiniteLattice& l);

// Closure operation A(U) = {x : x <| U}.
Bits closure(const Site& s, const Bits& u);

// Checks the four covering axioms. Exhaustive over subsets while 2^|L| stays
// enumerable (|L| <= 12 for single-subset axioms, |L| <= 8 for pair axioms);
// beyond that, `samples` seeded random subsets/pairs. Returns the first
// violated axiom, or nothing.
std::optional<int> check_cover_axioms(const Site& s, uint64_t seed = 1, int samples = 1000);

// The frame F(L,<|): closure-fixed down-sets ordered by inclusion. Meets are
// intersections, joins are closures of unions.
struct SiteFrame {
    FiniteLattice frame;
    std::vector<Bits> element_sets;  // aligned with frame elements

    int index_of(const Bits& set) const;  // -1 when not a frame element
};
SiteFrame frame_of_site(const Site& s);  // throws InvalidCovering

// Canonical map x |-> A(down x), as an index into the frame.
int canonical_map(const Site& s, const SiteFrame& f, int x);

// Frame map F(L) -> F(M) induced by a continuous map given via
// fstar : L -> P(M). Checks the three continuity conditions (condition 1 via
// tops when both sites have them), then maps U |-> A(fstar(U)). The result
// maps frame-element indices of F(L) to frame-element indices of F(M).
std::vector<int> induced_frame_map(const std::vector<Bits>& fstar, const Site& dom,
                                   const SiteFrame& dom_frame, const Site& cod,
                                   const SiteFrame& cod_frame, uint64_t seed = 1,
                                   int samples = 1000);

}  // namespace bohr
