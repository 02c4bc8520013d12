#pragma once

#include <cstdint>
#include <vector>

#include "bohr/poset.hpp"

namespace bohr {

// A candidate point of the spectrum: one atom chosen per context. Natural
// when for every comparable pair c <= d, the atom chosen at d lies under the
// atom chosen at c.
struct PointCandidate {
    std::vector<int> choice;  // atom index per context
};

struct SearchStats {
    long long nodes_visited = 0;
    int contexts = 0;
};

struct KSCertificate {
    bool point_found = false;
    PointCandidate point;  // meaningful iff point_found
    SearchStats stats;
};

// Exhaustive deterministic backtracking over choice functions. Contexts are
// processed in descending constraint degree (number of comparabilities),
// atoms in canonical order. A no_point verdict means the whole tree was
// searched.
KSCertificate find_point(const ContextPoset& poset);

// Naturality on every comparable pair. Throws IncompleteChoice when the
// choice is not total or an atom index is out of range.
bool verify_point(const ContextPoset& poset, const PointCandidate& cand);

}  // namespace bohr
