#include "bohr/lattice.hpp"

#include <algorithm>

namespace bohr {

FiniteLattice lattice_from_leq(std::vector<std::string> names,
                               const std::vector<std::vector<bool>>& leq) {
    int n = int(names.size());
    FiniteLattice l;
    l.n = n;
    l.names = std::move(names);
    l.up.assign(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq[i][j]) l.up[i].set(j);

    for (int i = 0; i < n; ++i) {
        if (!l.up[i].test(i)) throw BohrError("order is not reflexive");
        for (int j = 0; j < n; ++j) {
            if (i != j && l.leq(i, j) && l.leq(j, i)) throw BohrError("order is not antisymmetric");
            if (l.leq(i, j))
                for (int k = 0; k < n; ++k)
                    if (l.leq(j, k) && !l.leq(i, k)) throw BohrError("order is not transitive");
        }
    }

    auto glb = [&](int a, int b) -> int {
        int best = -1;
        for (int z = 0; z < n; ++z)
            if (l.leq(z, a) && l.leq(z, b) && (best < 0 || l.leq(best, z))) best = z;
        if (best < 0) return -1;
        for (int z = 0; z < n; ++z)
            if (l.leq(z, a) && l.leq(z, b) && !l.leq(z, best)) return -1;
        return best;
    };
    auto lub = [&](int a, int b) -> int {
        int best = -1;
        for (int z = 0; z < n; ++z)
            if (l.leq(a, z) && l.leq(b, z) && (best < 0 || l.leq(z, best))) best = z;
        if (best < 0) return -1;
        for (int z = 0; z < n; ++z)
            if (l.leq(a, z) && l.leq(b, z) && !l.leq(best, z)) return -1;
        return best;
    };

    l.meet.assign(n, std::vector<int>(n, -1));
    l.join.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            l.meet[a][b] = glb(a, b);
            l.join[a][b] = lub(a, b);
            if (l.meet[a][b] < 0 || l.join[a][b] < 0)
                throw BohrError("order is not a lattice: no meet/join of " + l.names[a] + ", " +
                                l.names[b]);
        }
    for (int i = 0; i < n; ++i) {
        if (l.up[i].count() == n) l.bottom = i;
        bool istop = true;
        for (int j = 0; j < n; ++j) istop = istop && l.leq(j, i);
        if (istop) l.top = i;
    }
    return l;
}

FiniteLattice powerset_lattice(int k) {
    int n = 1 << k;
    std::vector<std::string> names(n);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
        std::string s = "{";
        for (int b = 0; b < k; ++b)
            if ((a >> b) & 1) s += std::to_string(b) + ",";
        if (s.size() > 1) s.pop_back();
        names[a] = s + "}";
        for (int b = 0; b < n; ++b) leq[a][b] = (a & ~b) == 0;
    }
    return lattice_from_leq(std::move(names), leq);
}

FiniteLattice chain_lattice(int n) {
    std::vector<std::string> names(n);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
        names[a] = "c" + std::to_string(a);
        for (int b = a; b < n; ++b) leq[a][b] = true;
    }
    return lattice_from_leq(std::move(names), leq);
}

bool check_lattice_laws(const FiniteLattice& l) {
    for (int a = 0; a < l.n; ++a) {
        if (l.meet[a][a] != a || l.join[a][a] != a) return false;
        for (int b = 0; b < l.n; ++b) {
            if (l.meet[a][b] != l.meet[b][a] || l.join[a][b] != l.join[b][a]) return false;
            if (l.meet[a][l.join[a][b]] != a || l.join[a][l.meet[a][b]] != a) return false;
            for (int c = 0; c < l.n; ++c) {
                if (l.meet[a][l.meet[b][c]] != l.meet[l.meet[a][b]][c]) return false;
                if (l.join[a][l.join[b][c]] != l.join[l.join[a][b]][c]) return false;
            }
        }
    }
    return true;
}

bool check_distributive(const FiniteLattice& l) {
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y)
            for (int z = 0; z < l.n; ++z)
                if (l.meet[x][l.join[y][z]] != l.join[l.meet[x][y]][l.meet[x][z]]) return false;
    return true;
}

bool well_inside(const FiniteLattice& l, int x, int y) {
    if (l.top < 0 || l.bottom < 0) throw BohrError("well_inside needs top and bottom");
    for (int z = 0; z < l.n; ++z)
        if (l.meet[x][z] == l.bottom && l.join[y][z] == l.top) return true;
    return false;
}

bool is_normal(const FiniteLattice& l) {
    for (int b1 = 0; b1 < l.n; ++b1)
        for (int b2 = 0; b2 < l.n; ++b2) {
            if (l.join[b1][b2] != l.top) continue;
            bool witnessed = false;
            for (int c1 = 0; c1 < l.n && !witnessed; ++c1)
                for (int c2 = 0; c2 < l.n && !witnessed; ++c2)
                    witnessed = l.meet[c1][c2] == l.bottom && l.join[c1][b1] == l.top &&
                                l.join[c2][b2] == l.top;
            if (!witnessed) return false;
        }
    return true;
}

bool is_strongly_normal(const FiniteLattice& l) {
    for (int a = 0; a < l.n; ++a)
        for (int b = 0; b < l.n; ++b) {
            bool witnessed = false;
            for (int x = 0; x < l.n && !witnessed; ++x)
                for (int y = 0; y < l.n && !witnessed; ++y)
                    witnessed = l.leq(a, l.join[b][x]) && l.leq(b, l.join[a][y]) &&
                                l.meet[x][y] == l.bottom;
            if (!witnessed) return false;
        }
    return true;
}

std::vector<Bits> down_sets(const MeetSemilattice& l) {
    // Linear extension: sort by size of the down-set.
    std::vector<int> order(l.n);
    for (int i = 0; i < l.n; ++i) order[i] = i;
    std::vector<int> depth(l.n, 0);
    for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < l.n; ++j)
            if (l.leq(j, i)) ++depth[i];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] < depth[b]; });

    std::vector<Bits> sets = {Bits(l.n)};
    for (int x : order) {
        Bits preds(l.n);
        for (int j = 0; j < l.n; ++j)
            if (j != x && l.leq(j, x)) preds.set(j);
        size_t upto = sets.size();
        for (size_t s = 0; s < upto; ++s) {
            if (preds.subset_of(sets[s])) {
                Bits with = sets[s];
                with.set(x);
                sets.push_back(std::move(with));
            }
        }
    }
    std::sort(sets.begin(), sets.end());
    return sets;
}

std::vector<Bits> ideals(const FiniteLattice& l) {
    std::vector<Bits> out;
    for (const Bits& d : down_sets(l)) {
        if (l.bottom >= 0 && !d.test(l.bottom)) continue;
        bool closed = true;
        std::vector<int> elems = d.indices();
        for (size_t i = 0; i < elems.size() && closed; ++i)
            for (size_t j = i; j < elems.size() && closed; ++j)
                closed = d.test(l.join[elems[i]][elems[j]]);
        if (closed) out.push_back(d);
    }
    return out;
}

IdealLattice regular_ideals(const FiniteLattice& l) {
    std::vector<std::vector<bool>> wi(l.n, std::vector<bool>(l.n, false));
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y) wi[x][y] = well_inside(l, x, y);

    std::vector<Bits> regular;
    for (const Bits& u : ideals(l)) {
        bool reg = true;
        for (int x = 0; x < l.n && reg; ++x) {
            if (u.test(x)) continue;
            bool antecedent = true;  // all y << x lie in u
            for (int y = 0; y < l.n && antecedent; ++y)
                if (wi[y][x]) antecedent = u.test(y);
            if (antecedent) reg = false;  // then x would have to be in u
        }
        if (reg) regular.push_back(u);
    }

    int m = int(regular.size());
    std::vector<std::string> names(m);
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) {
        std::string s = "I{";
        for (int e : regular[i].indices()) s += l.names[e] + " ";
        if (s.back() == ' ') s.pop_back();
        names[i] = s + "}";
        for (int j = 0; j < m; ++j) leq[i][j] = regular[i].subset_of(regular[j]);
    }
    return IdealLattice{lattice_from_leq(std::move(names), leq), std::move(regular)};
}

int heyting_implies(const FiniteLattice& l, int x, int y) {
    if (l.bottom < 0) throw BohrError("heyting_implies needs a bottom");
    int r = l.bottom;
    for (int z = 0; z < l.n; ++z)
        if (l.leq(l.meet[z][x], y)) r = l.join[r][z];
    return r;
}

std::string lattice_dot(const FiniteLattice& l) {
    std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < l.n; ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + l.names[i] + "\"];\n";
    for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < l.n; ++j) {
            if (i == j || !l.leq(i, j)) continue;
            bool covering = true;
            for (int k = 0; k < l.n && covering; ++k)
                covering = k == i || k == j || !(l.leq(i, k) && l.leq(k, j));
            if (covering) out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
        }
    return out + "}\n";
}

FiniteLattice downset_lattice(const std::vector<std::vector<bool>>& poset_leq) {
    int k = int(poset_leq.size());
    MeetSemilattice base;
    base.n = k;
    base.up.assign(k, Bits(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (poset_leq[i][j]) base.up[i].set(j);
    std::vector<Bits> ds = down_sets(base);
    int m = int(ds.size());
    std::vector<std::string> names(m);
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) {
        names[i] = "d" + std::to_string(i);
        for (int j = 0; j < m; ++j) leq[i][j] = ds[i].subset_of(ds[j]);
    }
    return lattice_from_leq(std::move(names), leq);
}

}  // namespace bohr
