#include "bohr/states.hpp"

#include <cmath>
#include <sstream>

namespace bohr {

State::State(HermitianMatrix density) : rho(std::move(density)) {
    if (min_eigenvalue(rho) < -tol().order) throw InputError("state is not positive semidefinite");
    if (std::abs(rho.m.trace().real() - 1.0) > 1e-9) throw InputError("state trace is not one");
}

State state_from_vector(const std::vector<Complex>& psi) {
    int n = int(psi.size());
    double n2 = 0;
    for (const Complex& z : psi) n2 += std::norm(z);
    if (n2 <= 0) throw InputError("zero state vector");
    double inv = 1.0 / n2;
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = psi[i] * std::conj(psi[j]) * inv;
    return State(HermitianMatrix(m));
}

ContextValuation valuation(const State& rho, const Context& c) {
    if (rho.dim() != c.dim) throw DimensionMismatch();
    ContextValuation v;
    for (const ProjectionMatrix& p : c.atoms)
        v.atom_probs.push_back((rho.rho.m * p.p.m).trace().real());
    return v;
}

static bool probability_one(double value, WarningSink* w, const std::string& where) {
    if (w && value < 1.0 - tol().prob && value > 1.0 - tol().near_miss) {
        std::ostringstream os;
        os << "near-miss: probability " << value << " at " << where
           << " misses 1 by more than " << tol().prob << " but less than " << tol().near_miss;
        w->warn(os.str());
    }
    return value >= 1.0 - tol().prob;
}

bool state_subobject_membership(const State& rho, const SpectralOpen& u, int c) {
    const ContextPoset& poset = *u.poset;
    if (rho.dim() != poset.dim) throw DimensionMismatch();
    bool ok = true;
    poset.up[c].for_each([&](int d) {
        if (!ok) return;
        ContextValuation mu = valuation(rho, poset.contexts[d]);
        ok = mu(u.values[d]) >= 1.0 - tol().prob;
    });
    return ok;
}

UpperSet pairing(const HermitianMatrix& a, const RationalInterval& iv, const State& rho,
                 const ContextPoset& poset, int base, WarningSink* warnings) {
    if (a.dim() != poset.dim || rho.dim() != poset.dim) throw DimensionMismatch();
    if (base < 0 || base >= poset.size()) throw IndexOutOfRange("base context index");

    UpperSet result{base, Bits(poset.size())};
    poset.up[base].for_each([&](int ci) {
        const Context& ctx = poset.contexts[ci];
        InnerOuterProfile prof = inner_outer(a, ctx);
        ContextValuation mu = valuation(rho, ctx);
        uint64_t p_mask = 0, q_mask = 0;
        for (int p = 0; p < ctx.atom_count(); ++p) {
            bool inner = true, outer = true;
            if (iv.lo) inner = strictly_above(prof.lo[p], *iv.lo, warnings, "pairing inner clause");
            if (iv.hi) outer = strictly_below(prof.hi[p], *iv.hi, warnings, "pairing outer clause");
            if (inner) p_mask |= uint64_t(1) << p;
            if (outer) q_mask |= uint64_t(1) << p;
        }
        std::string where = "context '" + ctx.label + "'";
        bool inner_one = probability_one(mu(p_mask), warnings, where);
        bool outer_one = probability_one(mu(q_mask), warnings, where);
        if (inner_one && outer_one) result.members.set(ci);
    });
    return result;
}

}  // namespace bohr
