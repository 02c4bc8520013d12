#include "bohr/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bohr {

int ContextPoset::index_of_label(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (contexts[i].label == label) return i;
    return -1;
}

const std::vector<int>& ContextPoset::refinement(int i, int j) const {
    if (!leq(i, j)) throw NotComparable("context " + contexts[i].label + " is not below " +
                                        contexts[j].label);
    const auto& lst = up_list_[i];
    size_t pos = size_t(std::lower_bound(lst.begin(), lst.end(), j) - lst.begin());
    return refine_[i][pos];
}

std::vector<std::pair<int, int>> ContextPoset::hasse_edges() const {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < size(); ++i)
        for (int j : up[i].indices()) {
            if (j == i) continue;
            bool covering = true;
            for (int k : up[i].indices()) {
                if (k != i && k != j && leq(k, j)) {
                    covering = false;
                    break;
                }
            }
            if (covering) edges.push_back({i, j});
        }
    return edges;
}

ContextPoset build_poset(std::vector<Context> generators, int cap) {
    if (generators.empty()) throw InputError("build_poset needs at least one generator");
    int dim = generators[0].dim;
    if (dim > 64) throw InputError("dimensions above 64 are not supported (atom masks are 64-bit)");
    for (const Context& g : generators)
        if (g.dim != dim) throw DimensionMismatch("generator contexts have mixed dimensions");

    // Closure under pairwise intersection, trivial context always present.
    std::vector<Context> all;
    std::map<std::string, int> seen;
    auto add = [&](Context c) -> bool {
        std::string key = context_key(c);
        auto it = seen.find(key);
        if (it != seen.end()) return false;
        for (const auto& [k, idx] : seen) {
            (void)k;
            if (context_equal(all[idx], c)) return false;  // key collision fallback
        }
        if (int(all.size()) >= cap)
            throw PosetTooLarge("poset closure exceeds cap of " + std::to_string(cap) +
                                " contexts");
        seen[key] = int(all.size());
        all.push_back(std::move(c));
        return true;
    };

    for (Context& g : generators) add(std::move(g));
    add(trivial_context(dim));  // user-supplied labels win on duplicates
    size_t frontier = 0;
    while (frontier < all.size()) {
        size_t upto = all.size();
        for (size_t i = 0; i < upto; ++i)
            for (size_t j = std::max(i + 1, frontier); j < upto; ++j) add(intersect(all[i], all[j]));
        frontier = upto;
    }

    // Deterministic order: coarser (fewer atoms) first, canonical key breaks ties.
    std::vector<int> order(all.size());
    for (size_t i = 0; i < all.size(); ++i) order[i] = int(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (all[x].atom_count() != all[y].atom_count())
            return all[x].atom_count() < all[y].atom_count();
        return context_key(all[x]) < context_key(all[y]);
    });

    ContextPoset poset;
    poset.dim = dim;
    for (int idx : order) poset.contexts.push_back(std::move(all[idx]));

    int n = poset.size();
    poset.up.assign(n, Bits(n));
    poset.down.assign(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (includes(poset.contexts[i], poset.contexts[j])) {
                poset.up[i].set(j);
                poset.down[j].set(i);
            }
    for (int i = 0; i < n; ++i)
        if (poset.contexts[i].atom_count() == 1) poset.bottom = i;

    // Fine-atom -> coarse-atom maps along every comparability.
    poset.up_list_.resize(n);
    poset.refine_.resize(n);
    for (int i = 0; i < n; ++i) {
        poset.up_list_[i] = poset.up[i].indices();
        for (int j : poset.up_list_[i]) {
            const Context& coarse = poset.contexts[i];
            const Context& fine = poset.contexts[j];
            std::vector<int> parent(fine.atom_count(), -1);
            for (int q = 0; q < fine.atom_count(); ++q)
                for (int p = 0; p < coarse.atom_count(); ++p)
                    if (projection_below(fine.atoms[q], coarse.atoms[p])) {
                        parent[q] = p;
                        break;
                    }
            for (int q = 0; q < fine.atom_count(); ++q)
                if (parent[q] < 0)
                    throw BohrError("refinement map incomplete between '" + coarse.label +
                                    "' and '" + fine.label + "'");
            poset.refine_[i].push_back(std::move(parent));
        }
    }
    return poset;
}

static void check_index(const ContextPoset& poset, int c) {
    if (c < 0 || c >= poset.size())
        throw IndexOutOfRange("context index " + std::to_string(c) + " out of range");
}

UpperSet principal_up(const ContextPoset& poset, int c) {
    check_index(poset, c);
    return UpperSet{c, poset.up[c]};
}

bool is_upper_set(const ContextPoset& poset, const UpperSet& s) {
    if (!s.members.subset_of(poset.up[s.base])) return false;
    Bits closure(poset.size());
    s.members.for_each([&](int i) { closure = closure | poset.up[i]; });
    return closure == s.members;
}

std::vector<UpperSet> omega_elements(const ContextPoset& poset, int c, int cap) {
    check_index(poset, c);
    std::vector<int> elems = poset.up[c].indices();
    int m = int(elems.size());
    if (m > cap)
        throw EnumerationTooLarge("up-set of '" + poset.contexts[c].label + "' has " +
                                  std::to_string(m) + " contexts, cap is " + std::to_string(cap));
    // succ masks within up(c), in local coordinates
    std::vector<uint64_t> succ(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (poset.leq(elems[a], elems[b])) succ[a] |= uint64_t(1) << b;
    std::vector<UpperSet> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
        bool upper = true;
        for (int a = 0; a < m && upper; ++a)
            if ((mask >> a) & 1) upper = (succ[a] & ~mask) == 0;
        if (!upper) continue;
        UpperSet s{c, Bits(poset.size())};
        for (int a = 0; a < m; ++a)
            if ((mask >> a) & 1) s.members.set(elems[a]);
        out.push_back(std::move(s));
    }
    return out;
}

static void check_same_base(const UpperSet& s, const UpperSet& t) {
    if (s.base != t.base) throw NotComparable("upper sets have different base contexts");
}

UpperSet upper_meet(const ContextPoset&, const UpperSet& s, const UpperSet& t) {
    check_same_base(s, t);
    return UpperSet{s.base, s.members & t.members};
}

UpperSet upper_join(const ContextPoset&, const UpperSet& s, const UpperSet& t) {
    check_same_base(s, t);
    return UpperSet{s.base, s.members | t.members};
}

UpperSet upper_implies(const ContextPoset& poset, const UpperSet& s, const UpperSet& t) {
    check_same_base(s, t);
    UpperSet r{s.base, Bits(poset.size())};
    poset.up[s.base].for_each([&](int x) {
        // x in (s -> t) iff every y >= x in s is also in t
        if ((poset.up[x] & s.members).subset_of(t.members)) r.members.set(x);
    });
    return r;
}

UpperSet upper_top(const ContextPoset& poset, int c) { return principal_up(poset, c); }

UpperSet upper_bottom(const ContextPoset& poset, int c) {
    check_index(poset, c);
    return UpperSet{c, Bits(poset.size())};
}

bool upper_leq(const UpperSet& s, const UpperSet& t) {
    check_same_base(s, t);
    return s.members.subset_of(t.members);
}

UpperSet upper_restrict(const ContextPoset& poset, const UpperSet& s, int d) {
    check_index(poset, d);
    if (!poset.leq(s.base, d)) throw NotComparable("restriction target is not above the base");
    return UpperSet{d, s.members & poset.up[d]};
}

std::string poset_dot(const ContextPoset& poset) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < poset.size(); ++i)
        os << "  n" << i << " [label=\"" << poset.contexts[i].label << "\"];\n";
    for (auto [i, j] : poset.hasse_edges()) os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace bohr
