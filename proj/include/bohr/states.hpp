#pragma once

#include <vector>

#include "bohr/daseinisation.hpp"
#include "bohr/poset.hpp"
#include "bohr/spectrum.hpp"

namespace bohr {

// A state as a density matrix: positive semidefinite, trace one.
struct State {
    HermitianMatrix rho;

    explicit State(HermitianMatrix density);
    int dim() const { return rho.dim(); }
};

// Pure state |psi><psi| from a vector; the vector is normalized first.
State state_from_vector(const std::vector<Complex>& psi);

// The probability valuation mu_rho on L_C: mu(x) = tr(rho P_x) with P_x the
// sum of the atoms in x. Atom probabilities are cached so sums are computed
// in a fixed order (modularity is then exact on exactly-represented inputs).
struct ContextValuation {
    int context = -1;
    std::vector<double> atom_probs;

    double operator()(uint64_t atom_mask) const {
        double s = 0;
        for (size_t p = 0; p < atom_probs.size(); ++p)
            if ((atom_mask >> p) & 1) s += atom_probs[p];
        return s;
    }
};

ContextValuation valuation(const State& rho, const Context& c);

// Forcing of "mu_rho(-) = 1" at stage c: the valuation of u(D) equals one
// for every D >= c.
bool state_subobject_membership(const State& rho, const SpectralOpen& u, int c);

// The state-proposition pairing: the upper set of contexts C >= base where
// both the inner clause tr(rho P_C) = 1 and the outer clause tr(rho Q_C) = 1
// hold, with P_C, Q_C the projections built from the inner/outer profiles.
UpperSet pairing(const HermitianMatrix& a, const RationalInterval& iv, const State& rho,
                 const ContextPoset& poset, int base, WarningSink* warnings = nullptr);

}  // namespace bohr
