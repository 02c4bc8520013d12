#include "bohr/site.hpp"

#include <algorithm>
#include <random>

namespace bohr {

Site join_cover_site(const FiniteLattice& l) {
    if (l.bottom < 0) throw BohrError("join-cover site needs a bottom element");
    Site s;
    s.base = l;
    s.covers = [l](int x, const Bits& u) { return l.leq(x, l.join_of(u)); };
    return s;
}

Bits closure(const Site& s, const Bits& u) {
    Bits out(s.base.n);
    for (int x = 0; x < s.base.n; ++x)
        if (s.covers(x, u)) out.set(x);
    return out;
}

static Bits meet_set(const MeetSemilattice& l, const Bits& u, const Bits& v) {
    Bits out(l.n);
    u.for_each([&](int x) { v.for_each([&](int y) { out.set(l.meet[x][y]); }); });
    return out;
}

std::optional<int> check_cover_axioms(const Site& s, uint64_t seed, int samples) {
    const int n = s.base.n;
    std::mt19937_64 rng(seed);
    auto random_subset = [&] {
        Bits b(n);
        for (int i = 0; i < n; ++i)
            if (rng() & 1) b.set(i);
        return b;
    };

    bool exhaustive_single = n <= 12, exhaustive_pairs = n <= 8;
    std::vector<Bits> singles;
    if (exhaustive_single) {
        for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
            Bits b(n);
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) b.set(i);
            singles.push_back(std::move(b));
        }
    } else {
        for (int k = 0; k < samples; ++k) singles.push_back(random_subset());
    }

    // Axiom 1: x in U implies x <| U.  Axiom 3: x <| U implies x /\ y <| U,
    // i.e. A(U) is down-closed.
    for (const Bits& u : singles) {
        Bits cl = closure(s, u);
        if (!u.subset_of(cl)) return 1;
        for (int x : cl.indices())
            for (int y = 0; y < n; ++y)
                if (!cl.test(s.base.meet[x][y])) return 3;
    }

    // Axiom 2: U subset of A(V) implies A(U) subset of A(V).
    // Axiom 4: x in U and x in V implies x <| U /\ V.
    auto check_pair = [&](const Bits& u, const Bits& v) -> std::optional<int> {
        Bits cu = closure(s, u), cv = closure(s, v);
        if (u.subset_of(cv) && !cu.subset_of(cv)) return 2;
        Bits common = u & v;
        if (common.any()) {
            Bits uv = meet_set(s.base, u, v);
            for (int x : common.indices())
                if (!s.covers(x, uv)) return 4;
        }
        return std::nullopt;
    };
    if (exhaustive_pairs) {
        for (const Bits& u : singles)
            for (const Bits& v : singles)
                if (auto bad = check_pair(u, v)) return bad;
    } else {
        for (int k = 0; k < samples; ++k)
            if (auto bad = check_pair(random_subset(), random_subset())) return bad;
    }
    return std::nullopt;
}

int SiteFrame::index_of(const Bits& set) const {
    auto it = std::lower_bound(element_sets.begin(), element_sets.end(), set);
    if (it != element_sets.end() && *it == set) return int(it - element_sets.begin());
    return -1;
}

SiteFrame frame_of_site(const Site& s) {
    if (auto bad = check_cover_axioms(s)) throw InvalidCovering(*bad);
    std::vector<Bits> fixed;
    for (const Bits& d : down_sets(s.base))
        if (closure(s, d) == d) fixed.push_back(d);
    std::sort(fixed.begin(), fixed.end());

    int m = int(fixed.size());
    std::vector<std::string> names(m);
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) {
        std::string nm = "{";
        for (int e : fixed[i].indices()) nm += s.base.names.empty()
                                                   ? std::to_string(e) + " "
                                                   : s.base.names[e] + " ";
        if (nm.back() == ' ') nm.pop_back();
        names[i] = nm + "}";
        for (int j = 0; j < m; ++j) leq[i][j] = fixed[i].subset_of(fixed[j]);
    }
    return SiteFrame{lattice_from_leq(std::move(names), leq), std::move(fixed)};
}

int canonical_map(const Site& s, const SiteFrame& f, int x) {
    Bits dx(s.base.n);
    for (int i = 0; i < s.base.n; ++i)
        if (s.base.leq(i, x)) dx.set(i);
    int idx = f.index_of(closure(s, dx));
    if (idx < 0) throw BohrError("canonical map image is not a frame element");
    return idx;
}

std::vector<int> induced_frame_map(const std::vector<Bits>& fstar, const Site& dom,
                                   const SiteFrame& dom_frame, const Site& cod,
                                   const SiteFrame& cod_frame, uint64_t seed, int samples) {
    const int nl = dom.base.n;
    if (int(fstar.size()) != nl) throw BohrError("fstar must be defined on every site element");

    // Condition 1: image covers the codomain; with tops present this is the
    // top-to-top form, otherwise literal surjectivity of the union.
    if (dom.base.top >= 0 && cod.base.top >= 0) {
        if (!closure(cod, fstar[dom.base.top]).test(cod.base.top)) throw NotContinuous(1);
    } else {
        Bits all(cod.base.n);
        for (const Bits& img : fstar) all = all | img;
        if (all != Bits::full(cod.base.n)) throw NotContinuous(1);
    }

    // Condition 2: fstar(x) /\ fstar(y) <| fstar(x /\ y).
    for (int x = 0; x < nl; ++x)
        for (int y = x; y < nl; ++y) {
            Bits lhs = meet_set(cod.base, fstar[x], fstar[y]);
            Bits rhs = closure(cod, fstar[dom.base.meet[x][y]]);
            if (!lhs.subset_of(rhs)) throw NotContinuous(2);
        }

    // Condition 3: x <| U implies fstar(x) <| fstar(U).
    auto fstar_of = [&](const Bits& u) {
        Bits img(cod.base.n);
        u.for_each([&](int e) { img = img | fstar[e]; });
        return img;
    };
    auto check3 = [&](const Bits& u) {
        Bits target = closure(cod, fstar_of(u));
        for (int x : closure(dom, u).indices())
            if (!fstar[x].subset_of(target)) return false;
        return true;
    };
    if (nl <= 12) {
        for (uint64_t mask = 0; mask < (uint64_t(1) << nl); ++mask) {
            Bits u(nl);
            for (int i = 0; i < nl; ++i)
                if ((mask >> i) & 1) u.set(i);
            if (!check3(u)) throw NotContinuous(3);
        }
    } else {
        std::mt19937_64 rng(seed);
        for (int k = 0; k < samples; ++k) {
            Bits u(nl);
            for (int i = 0; i < nl; ++i)
                if (rng() & 1) u.set(i);
            if (!check3(u)) throw NotContinuous(3);
        }
    }

    // The frame map U |-> A(fstar(U)).
    std::vector<int> map(dom_frame.frame.n, -1);
    for (int i = 0; i < dom_frame.frame.n; ++i) {
        Bits img = closure(cod, fstar_of(dom_frame.element_sets[i]));
        map[i] = cod_frame.index_of(img);
        if (map[i] < 0) throw BohrError("induced map image is not a frame element");
    }

    // Frame-map laws, verified while sizes permit.
    const FiniteLattice& fl = dom_frame.frame;
    const FiniteLattice& fm = cod_frame.frame;
    if (fl.n <= 256) {
        if (fl.top >= 0 && map[fl.top] != fm.top) throw BohrError("induced map drops the top");
        for (int a = 0; a < fl.n; ++a)
            for (int b = 0; b < fl.n; ++b) {
                if (map[fl.meet[a][b]] != fm.meet[map[a]][map[b]])
                    throw BohrError("induced map does not preserve meets");
                if (map[fl.join[a][b]] != fm.join[map[a]][map[b]])
                    throw BohrError("induced map does not preserve joins");
            }
    }
    return map;
}

}  // namespace bohr
