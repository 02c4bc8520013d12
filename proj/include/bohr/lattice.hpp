#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bohr/bits.hpp"
#include "bohr/errors.hpp"

namespace bohr {

// Finite meet-semilattice given by its order; meets precomputed. top/bottom
// are -1 when absent.
struct MeetSemilattice {
    int n = 0;
    std::vector<std::string> names;
    std::vector<Bits> up;                // up[i] = {j : i <= j}, reflexive
    std::vector<std::vector<int>> meet;  // n x n
    int top = -1;
    int bottom = -1;

    bool leq(int a, int b) const { return up[a].test(b); }
    Bits down_of(int x) const {
        Bits d(n);
        for (int i = 0; i < n; ++i)
            if (leq(i, x)) d.set(i);
        return d;
    }
};

// Finite lattice: adds joins. Construction checks that meets/joins exist and
// are unique; distributivity is a separate check.
struct FiniteLattice : MeetSemilattice {
    std::vector<std::vector<int>> join;

    int join_of(const Bits& set) const {  // bottom for the empty set
        int j = bottom;
        set.for_each([&](int x) { j = (j < 0) ? x : join[j][x]; });
        if (j < 0) throw BohrError("empty join in a lattice without bottom");
        return j;
    }
    int meet_of(const Bits& set) const {  // top for the empty set
        int m = top;
        set.for_each([&](int x) { m = (m < 0) ? x : meet[m][x]; });
        if (m < 0) throw BohrError("empty meet in a lattice without top");
        return m;
    }
};

// Builds a lattice from a reflexive partial order given as a relation matrix;
// throws when glb/lub are missing (not a lattice).
FiniteLattice lattice_from_leq(std::vector<std::string> names,
                               const std::vector<std::vector<bool>>& leq);

// Powerset of k atoms, elements indexed by bitmask 0..2^k-1.
FiniteLattice powerset_lattice(int k);
// Chain 0 < 1 < ... < n-1.
FiniteLattice chain_lattice(int n);

bool check_lattice_laws(const FiniteLattice& l);
bool check_distributive(const FiniteLattice& l);

// x << y: exists z with x /\ z = bottom and y \/ z = top.
bool well_inside(const FiniteLattice& l, int x, int y);

bool is_normal(const FiniteLattice& l);
bool is_strongly_normal(const FiniteLattice& l);

// All down-sets (as Bits), enumerated directly; cheap even when 2^n is not.
std::vector<Bits> down_sets(const MeetSemilattice& l);

// Ideals: down-sets containing bottom and closed under binary joins.
std::vector<Bits> ideals(const FiniteLattice& l);

// The frame RIdl(L) of regular ideals, ordered by inclusion; element_sets
// keeps the underlying ideals aligned with the lattice elements.
struct IdealLattice {
    FiniteLattice frame;
    std::vector<Bits> element_sets;
};
IdealLattice regular_ideals(const FiniteLattice& l);

// Heyting implication in a finite distributive lattice: join of {z : z /\ x <= y}.
int heyting_implies(const FiniteLattice& l, int x, int y);

// Downset lattice of an arbitrary finite poset (Birkhoff); used as a source
// of random distributive lattices in tests.
FiniteLattice downset_lattice(const std::vector<std::vector<bool>>& poset_leq);

// Hasse diagram of a finite lattice in DOT format.
std::string lattice_dot(const FiniteLattice& l);

}  // namespace bohr
