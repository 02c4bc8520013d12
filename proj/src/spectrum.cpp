#include "bohr/spectrum.hpp"

namespace bohr {

uint64_t full_atom_mask(const Context& c) {
    return (c.atom_count() == 64) ? ~uint64_t(0) : (uint64_t(1) << c.atom_count()) - 1;
}

static void check_context_index(const ContextPoset& poset, int c) {
    if (c < 0 || c >= poset.size())
        throw IndexOutOfRange("context index " + std::to_string(c) + " out of range");
}

LatticeElement generator(const ContextPoset& poset, int c, const HermitianMatrix& a) {
    check_context_index(poset, c);
    std::vector<double> coeff = poset.contexts[c].span_coefficients(a);
    LatticeElement x{c, 0};
    for (size_t p = 0; p < coeff.size(); ++p)
        if (coeff[p] > tol().order) x.atoms |= uint64_t(1) << p;
    return x;
}

LatticeElement embed(const ContextPoset& poset, const LatticeElement& x, int d) {
    check_context_index(poset, d);
    if (!poset.leq(x.context, d)) throw NotComparable();
    const std::vector<int>& parent = poset.refinement(x.context, d);
    LatticeElement y{d, 0};
    for (size_t q = 0; q < parent.size(); ++q)
        if ((x.atoms >> parent[q]) & 1) y.atoms |= uint64_t(1) << q;
    return y;
}

bool spectrum_cover(const ContextPoset&, int c, const LatticeElement& x,
                    const std::vector<LatticeElement>& u) {
    uint64_t join = 0;
    for (const LatticeElement& e : u) {
        if (e.context != c) throw NotComparable("cover elements live in different contexts");
        join |= e.atoms;
    }
    return (x.atoms & ~join) == 0;
}

bool is_monotone(const SpectralOpen& u) {
    const ContextPoset& poset = *u.poset;
    for (int c = 0; c < poset.size(); ++c)
        for (int d : poset.up[c].indices()) {
            LatticeElement e = embed(poset, LatticeElement{c, u.values[c]}, d);
            if (e.atoms & ~u.values[d]) return false;
        }
    return true;
}

SpectralOpen sopen_top(const ContextPoset& poset) {
    SpectralOpen u{&poset, std::vector<uint64_t>(poset.size(), 0)};
    for (int c = 0; c < poset.size(); ++c) u.values[c] = full_atom_mask(poset.contexts[c]);
    return u;
}

SpectralOpen sopen_bottom(const ContextPoset& poset) {
    return SpectralOpen{&poset, std::vector<uint64_t>(poset.size(), 0)};
}

static void check_same_poset(const SpectralOpen& u, const SpectralOpen& v) {
    if (u.poset == nullptr || u.poset != v.poset) throw PosetMismatch();
}

SpectralOpen sopen_meet(const SpectralOpen& u, const SpectralOpen& v) {
    check_same_poset(u, v);
    SpectralOpen r{u.poset, u.values};
    for (size_t c = 0; c < r.values.size(); ++c) r.values[c] &= v.values[c];
    return r;
}

SpectralOpen sopen_join(const SpectralOpen& u, const SpectralOpen& v) {
    check_same_poset(u, v);
    SpectralOpen r{u.poset, u.values};
    for (size_t c = 0; c < r.values.size(); ++c) r.values[c] |= v.values[c];
    return r;
}

SpectralOpen sopen_implies(const SpectralOpen& u, const SpectralOpen& v) {
    check_same_poset(u, v);
    const ContextPoset& poset = *u.poset;
    SpectralOpen r{u.poset, std::vector<uint64_t>(poset.size(), 0)};
    for (int c = 0; c < poset.size(); ++c) {
        // The candidates form a down-set closed under joins (embed is a
        // lattice embedding), so the largest is the join of the good atoms.
        for (int p = 0; p < poset.contexts[c].atom_count(); ++p) {
            LatticeElement atom{c, uint64_t(1) << p};
            bool good = true;
            for (int d : poset.up[c].indices()) {
                LatticeElement e = embed(poset, atom, d);
                if ((e.atoms & u.values[d]) & ~v.values[d]) {
                    good = false;
                    break;
                }
            }
            if (good) r.values[c] |= atom.atoms;
        }
    }
    return r;
}

SpectralOpen sopen_not(const SpectralOpen& u) { return sopen_implies(u, sopen_bottom(*u.poset)); }

bool sopen_leq(const SpectralOpen& u, const SpectralOpen& v) {
    check_same_poset(u, v);
    for (size_t c = 0; c < u.values.size(); ++c)
        if (u.values[c] & ~v.values[c]) return false;
    return true;
}

SpectralOpen pi_sigma_star(const ContextPoset& poset, int d) {
    return pi_sigma_star(poset, principal_up(poset, d));
}

SpectralOpen pi_sigma_star(const ContextPoset& poset, const UpperSet& s) {
    SpectralOpen u = sopen_bottom(poset);
    s.members.for_each([&](int e) { u.values[e] = full_atom_mask(poset.contexts[e]); });
    return u;
}

FiniteLattice spectral_lattice(const Context& c) {
    FiniteLattice l = powerset_lattice(c.atom_count());
    for (int e = 0; e < l.n; ++e) {
        std::string nm = "D{";
        for (int p = 0; p < c.atom_count(); ++p)
            if ((e >> p) & 1) nm += std::to_string(p) + ",";
        if (nm.back() == ',') nm.pop_back();
        l.names[e] = nm + "}";
    }
    return l;
}

}  // namespace bohr
