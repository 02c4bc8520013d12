#include "bohr/ks.hpp"

#include <algorithm>

namespace bohr {

KSCertificate find_point(const ContextPoset& poset) {
    const int n = poset.size();
    // Constraint degree: number of strict comparabilities.
    std::vector<int> degree(n, 0);
    for (int i = 0; i < n; ++i) degree[i] = poset.up[i].count() + poset.down[i].count() - 2;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });

    // For each position, the earlier positions it must stay consistent with.
    std::vector<std::vector<std::pair<int, bool>>> checks(n);  // (pos, other_is_coarser)
    for (int pos = 0; pos < n; ++pos)
        for (int prev = 0; prev < pos; ++prev) {
            int c = order[pos], o = order[prev];
            if (poset.leq(o, c)) checks[pos].push_back({prev, true});
            else if (poset.leq(c, o)) checks[pos].push_back({prev, false});
        }

    KSCertificate cert;
    cert.stats.contexts = n;
    std::vector<int> choice(n, -1);  // indexed by position in `order`

    // Iterative DFS over atom choices.
    int pos = 0;
    std::vector<int> next_atom(n, 0);
    while (pos >= 0) {
        if (pos == n) {
            cert.point_found = true;
            cert.point.choice.assign(n, -1);
            for (int k = 0; k < n; ++k) cert.point.choice[order[k]] = choice[k];
            return cert;
        }
        int ci = order[pos];
        int atom_count = poset.contexts[ci].atom_count();
        bool advanced = false;
        while (next_atom[pos] < atom_count) {
            int atom = next_atom[pos]++;
            ++cert.stats.nodes_visited;
            bool consistent = true;
            for (auto [prev, coarser] : checks[pos]) {
                int other = order[prev];
                if (coarser) {
                    // other <= ci: the atom at ci must refine the atom at other
                    if (poset.refinement(other, ci)[atom] != choice[prev]) consistent = false;
                } else {
                    if (poset.refinement(ci, other)[choice[prev]] != atom) consistent = false;
                }
                if (!consistent) break;
            }
            if (consistent) {
                choice[pos] = atom;
                ++pos;
                if (pos < n) next_atom[pos] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            choice[pos] = -1;
            --pos;
        }
    }
    return cert;  // exhausted: no point
}

bool verify_point(const ContextPoset& poset, const PointCandidate& cand) {
    const int n = poset.size();
    if (int(cand.choice.size()) != n) throw IncompleteChoice();
    for (int i = 0; i < n; ++i)
        if (cand.choice[i] < 0 || cand.choice[i] >= poset.contexts[i].atom_count())
            throw IncompleteChoice("choice at '" + poset.contexts[i].label + "' is invalid");
    for (int c = 0; c < n; ++c)
        for (int d : poset.up[c].indices()) {
            if (d == c) continue;
            if (poset.refinement(c, d)[cand.choice[d]] != cand.choice[c]) return false;
        }
    return true;
}

}  // namespace bohr
