#pragma once

#include <cstdint>
#include <vector>

#include "bohr/lattice.hpp"
#include "bohr/poset.hpp"

namespace bohr {

// An element of L_C: a subset of the context's atoms, as a bitmask.
struct LatticeElement {
    int context = -1;
    uint64_t atoms = 0;
};

// An element of the external Gelfand spectrum O(Sigma)(C.1): a monotone
// assignment of a lattice element to every context of the poset. Monotone
// means embed(values[C], D) <= values[D] whenever C <= D.
struct SpectralOpen {
    const ContextPoset* poset = nullptr;
    std::vector<uint64_t> values;  // atom mask per context

    bool operator==(const SpectralOpen& o) const {
        return poset == o.poset && values == o.values;
    }
};

uint64_t full_atom_mask(const Context& c);

// D_a for a in the real span of the context: the atoms where the coefficient
// of a is strictly positive. Throws NotInContext on the span test.
LatticeElement generator(const ContextPoset& poset, int c, const HermitianMatrix& a);

// L_C -> L_D along c <= d: a set of coarse atoms maps to the fine atoms
// lying under them.
LatticeElement embed(const ContextPoset& poset, const LatticeElement& x, int d);

// The spectrum cover at a context; with finite spectra it collapses to
// x <= \/U.
bool spectrum_cover(const ContextPoset& poset, int c, const LatticeElement& x,
                    const std::vector<LatticeElement>& u);

bool is_monotone(const SpectralOpen& u);

SpectralOpen sopen_top(const ContextPoset& poset);
SpectralOpen sopen_bottom(const ContextPoset& poset);
SpectralOpen sopen_meet(const SpectralOpen& u, const SpectralOpen& v);
SpectralOpen sopen_join(const SpectralOpen& u, const SpectralOpen& v);
// (u -> v)(C) = largest x in L_C with embed(x,D) /\ u(D) <= v(D) for all D >= C.
SpectralOpen sopen_implies(const SpectralOpen& u, const SpectralOpen& v);
SpectralOpen sopen_not(const SpectralOpen& u);
bool sopen_leq(const SpectralOpen& u, const SpectralOpen& v);

// External description of the spectrum: the frame map O(A) -> O(Sigma)(C.1)
// on basic opens, up(d) |-> top above d, bottom elsewhere.
SpectralOpen pi_sigma_star(const ContextPoset& poset, int d);
// Extension to arbitrary upper sets of the whole poset.
SpectralOpen pi_sigma_star(const ContextPoset& poset, const UpperSet& s);

// L_C as an explicit finite lattice (the powerset of the atoms), for the
// lattice_frames oracles.
FiniteLattice spectral_lattice(const Context& c);

}  // namespace bohr
