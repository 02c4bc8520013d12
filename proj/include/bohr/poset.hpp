#pragma once

#include <string>
#include <vector>

#include "bohr/bits.hpp"
#include "bohr/context.hpp"

namespace bohr {

// Upward-closed set of contexts sitting above a base context; an element of
// the subobject classifier Omega(base) and the codomain of the pairing.
struct UpperSet {
    int base = 0;
    Bits members;
};

// Finite, intersection-closed fragment of the context poset under the
// coarsening order. Bottom is the trivial context. Immutable after build.
struct ContextPoset {
    int dim = 0;
    std::vector<Context> contexts;
    std::vector<Bits> up;    // up[i] = {j : i <= j}, reflexive
    std::vector<Bits> down;  // down[i] = {j : j <= i}, reflexive
    int bottom = 0;

    int size() const { return int(contexts.size()); }
    bool leq(int i, int j) const { return up[i].test(j); }
    int index_of_label(const std::string& label) const;  // -1 if absent

    // For i <= j (j refines i): fine atom q of j lies under exactly one atom
    // of i; this returns that coarse atom index per fine atom.
    const std::vector<int>& refinement(int i, int j) const;

    // Covering pairs (i, j): i < j with nothing strictly between.
    std::vector<std::pair<int, int>> hasse_edges() const;

  private:
    friend ContextPoset build_poset(std::vector<Context>, int);
    std::vector<std::vector<std::vector<int>>> refine_;  // [i][pos-in-up[i]]
    std::vector<std::vector<int>> up_list_;              // sorted indices of up[i]
};

// Closure of the generators under pairwise intersection, plus the trivial
// context; deterministic ordering (coarser contexts first, then canonical
// key). Throws PosetTooLarge beyond the cap.
ContextPoset build_poset(std::vector<Context> generators, int cap = 512);

UpperSet principal_up(const ContextPoset& poset, int c);

// All upper sets of up(c), bottom (empty) and top (all of up(c)) included.
// Throws EnumerationTooLarge when |up(c)| exceeds the cap.
std::vector<UpperSet> omega_elements(const ContextPoset& poset, int c, int cap = 20);

bool is_upper_set(const ContextPoset& poset, const UpperSet& s);

// Heyting operations in Omega(c). Implication: largest upper set U of up(c)
// with U /\ s <= t.
UpperSet upper_meet(const ContextPoset& poset, const UpperSet& s, const UpperSet& t);
UpperSet upper_join(const ContextPoset& poset, const UpperSet& s, const UpperSet& t);
UpperSet upper_implies(const ContextPoset& poset, const UpperSet& s, const UpperSet& t);
UpperSet upper_top(const ContextPoset& poset, int c);
UpperSet upper_bottom(const ContextPoset& poset, int c);
bool upper_leq(const UpperSet& s, const UpperSet& t);

// Functor action Omega(c) -> Omega(d) for c <= d: S |-> S /\ up(d).
UpperSet upper_restrict(const ContextPoset& poset, const UpperSet& s, int d);

// Hasse diagram in DOT format, nodes labeled by context labels.
std::string poset_dot(const ContextPoset& poset);

}  // namespace bohr
