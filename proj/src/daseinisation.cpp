#include "bohr/daseinisation.hpp"

#include <cmath>
#include <sstream>

namespace bohr {

InnerOuterProfile inner_outer(const HermitianMatrix& a, const Context& c) {
    if (a.dim() != c.dim) throw DimensionMismatch();
    InnerOuterProfile prof;
    prof.context = -1;
    for (const ProjectionMatrix& p : c.atoms) {
        HermitianMatrix block = compress(a, p);
        EigenDecomposition d = eigen(block);
        prof.lo.push_back(d.values.front());
        prof.hi.push_back(d.values.back());
    }
    return prof;
}

bool strictly_above(double value, const Rational& bound, WarningSink* w, const char* what) {
    double b = to_double(bound);
    if (w && std::abs(value - b) <= tol().strict) {
        std::ostringstream os;
        os << "boundary: " << what << " value " << value << " within " << tol().strict
           << " of endpoint " << b;
        w->warn(os.str());
    }
    return value - b > tol().strict;
}

bool strictly_below(double value, const Rational& bound, WarningSink* w, const char* what) {
    double b = to_double(bound);
    if (w && std::abs(value - b) <= tol().strict) {
        std::ostringstream os;
        os << "boundary: " << what << " value " << value << " within " << tol().strict
           << " of endpoint " << b;
        w->warn(os.str());
    }
    return b - value > tol().strict;
}

SpectralOpen daseinise(const HermitianMatrix& a, const RationalInterval& iv,
                       const ContextPoset& poset, WarningSink* warnings) {
    if (a.dim() != poset.dim) throw DimensionMismatch();
    SpectralOpen u = sopen_bottom(poset);
    for (int ci = 0; ci < poset.size(); ++ci) {
        InnerOuterProfile prof = inner_outer(a, poset.contexts[ci]);
        prof.context = ci;
        uint64_t mask = 0;
        for (size_t p = 0; p < prof.lo.size(); ++p) {
            bool in = true;
            if (iv.lo) in = in && strictly_above(prof.lo[p], *iv.lo, warnings, "inner approximant");
            if (iv.hi) in = in && strictly_below(prof.hi[p], *iv.hi, warnings, "outer approximant");
            if (in) mask |= uint64_t(1) << p;
        }
        u.values[ci] = mask;
    }
    return u;
}

LatticeElement gelfand_open(const ContextPoset& poset, int c, const HermitianMatrix& a,
                            const RationalInterval& iv) {
    const Context& ctx = poset.contexts[c];
    uint64_t mask = full_atom_mask(ctx);
    if (iv.lo) {
        HermitianMatrix shifted = a - to_double(*iv.lo) * HermitianMatrix::identity(a.dim());
        mask &= generator(poset, c, shifted).atoms;
    }
    if (iv.hi) {
        HermitianMatrix shifted = to_double(*iv.hi) * HermitianMatrix::identity(a.dim()) - a;
        mask &= generator(poset, c, shifted).atoms;
    }
    return LatticeElement{c, mask};
}

bool daseinise_leq(const HermitianMatrix& a, const HermitianMatrix& b,
                   const ContextPoset& poset) {
    if (a.dim() != b.dim()) throw DimensionMismatch();
    for (int ci = 0; ci < poset.size(); ++ci) {
        InnerOuterProfile pa = inner_outer(a, poset.contexts[ci]);
        InnerOuterProfile pb = inner_outer(b, poset.contexts[ci]);
        for (size_t p = 0; p < pa.lo.size(); ++p) {
            if (pa.lo[p] > pb.lo[p] + tol().order) return false;
            if (pa.hi[p] > pb.hi[p] + tol().order) return false;
        }
    }
    return true;
}

}  // namespace bohr
