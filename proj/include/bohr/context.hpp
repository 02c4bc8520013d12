#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohr/matrix.hpp"

namespace bohr {

// A commutative unital *-subalgebra of M_n, finitely represented by its
// orthogonal decomposition of the identity. Atoms are pairwise orthogonal
// projections summing to 1, each of rank >= 1, kept in canonical order.
struct Context {
    int dim = 0;
    std::vector<ProjectionMatrix> atoms;
    std::string label;

    int atom_count() const { return int(atoms.size()); }
    // Real span membership: coefficients of a = sum lambda_p p, or throws
    // NotInContext when the residual exceeds tolerance.
    std::vector<double> span_coefficients(const HermitianMatrix& a) const;
    bool in_span(const HermitianMatrix& a) const;
};

// The trivial context C = C*(1) = {multiples of the identity}.
Context trivial_context(int dim, std::string label = "triv");

// Builds a context from an arbitrary list of mutually orthogonal projections
// summing to 1; validates the invariants and canonicalizes atom order.
Context make_context(std::vector<ProjectionMatrix> atoms, std::string label);

// Context from an orthonormal basis (rank-1 atoms), the KS-configuration form.
Context context_from_basis(const std::vector<std::vector<Complex>>& basis, std::string label);

// C*(a): atoms are the clustered spectral projections of a.
Context context_of(const HermitianMatrix& a, std::string label = "");

// Canonical sort key: atoms ordered by (rank, entries rounded to 1e-6).
// Equal contexts get equal keys, and the key orders posets deterministically.
std::string context_key(const Context& c);
std::string atom_key(const ProjectionMatrix& p);

bool context_equal(const Context& c, const Context& d);

// Coarsening order: c <= d iff every atom of c is a sum of atoms of d.
bool includes(const Context& c, const Context& d);

// Seed for the generic-element retry in intersect (env BOHR_SEED overrides).
uint64_t intersect_seed();
void set_intersect_seed(uint64_t seed);

// Greatest lower bound of two contexts in the coarsening order: the context
// of the subalgebra spanned by the intersection of the two real spans.
Context intersect(const Context& c, const Context& d);

}  // namespace bohr
