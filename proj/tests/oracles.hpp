// Shared test generators and independent oracles. Everything here is kept
// deliberately naive (brute force, enumeration, binary search) and separate
// from the library paths it cross-checks.
#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "bohr/context.hpp"
#include "bohr/ks.hpp"
#include "bohr/matrix.hpp"
#include "bohr/poset.hpp"
#include "bohr/spectrum.hpp"
#include "bohr/states.hpp"

namespace oracles {

using namespace bohr;

inline HermitianMatrix random_hermitian(int dim, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = u(rng);
        for (int j = i + 1; j < dim; ++j) {
            Complex z(u(rng), u(rng));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return HermitianMatrix(m);
}

inline HermitianMatrix random_psd(int dim, std::mt19937_64& rng, double scale = 1.0) {
    HermitianMatrix h = random_hermitian(dim, rng, scale);
    return HermitianMatrix(0.5 * (h.m * h.m.adjoint() + h.m.adjoint() * h.m));
}

inline State random_state(int dim, std::mt19937_64& rng) {
    HermitianMatrix p = random_psd(dim, rng);
    double tr = p.m.trace().real();
    if (tr <= 1e-12) return State(HermitianMatrix((1.0 / dim) * ComplexMatrix::identity(dim)));
    return State(HermitianMatrix((1.0 / tr) * p.m));
}

// A rational within [lo, hi] on a 1/64 grid, at distance > 1e-3 from every
// value in `avoid` (keeps strict-inequality decisions far from ties), and
// strictly above `above` when given.
inline Rational random_rational_avoiding(double lo, double hi, const std::vector<double>& avoid,
                                         std::mt19937_64& rng, const Rational* above = nullptr) {
    std::uniform_int_distribution<long long> pick(llround(std::floor(lo * 64)),
                                                  llround(std::ceil(hi * 64)));
    for (int tries = 0; tries < 4096; ++tries) {
        Rational r(pick(rng), 64);
        double rd = to_double(r);
        bool ok = !above || *above < r;
        for (double a : avoid) ok = ok && std::abs(rd - a) > 1e-3;
        if (ok) return r;
    }
    throw std::runtime_error("no safe rational found");
}

// A random safe interval bracketing part of the spectrum of a.
inline RationalInterval random_safe_interval(const HermitianMatrix& a, std::mt19937_64& rng) {
    EigenDecomposition d = eigen(a);
    Rational lo =
        random_rational_avoiding(d.values.front() - 1, d.values.back() + 1, d.values, rng);
    Rational hi = random_rational_avoiding(to_double(lo) + 0.05, d.values.back() + 2, d.values,
                                           rng, &lo);
    return RationalInterval{lo, hi};
}

// Independent extremal-approximant oracle: the largest lambda with
// lambda p - M (1 - p) <= a, found by binary search on the positivity test.
inline double inner_approximant_oracle(const HermitianMatrix& a, const ProjectionMatrix& p) {
    double scale = std::max(1.0, a.m.frobenius_norm());
    double big = 1e6 * scale;
    ComplexMatrix off = ComplexMatrix::identity(a.dim()) - p.p.m;
    auto fits = [&](double lambda) {
        HermitianMatrix f(lambda * p.p.m - big * off);
        return is_positive_leq(f, a);
    };
    double lo = min_eigenvalue(a) - 1.0, hi = max_eigenvalue(a) + 1.0;
    if (!fits(lo)) return lo;  // cannot happen for M large enough
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        (fits(mid) ? lo : hi) = mid;
    }
    return lo;
}

inline double outer_approximant_oracle(const HermitianMatrix& a, const ProjectionMatrix& p) {
    return -inner_approximant_oracle(HermitianMatrix(-1.0 * a.m), p);
}

// Brute-force point search: every choice function, checked pairwise.
inline bool brute_force_has_point(const ContextPoset& poset) {
    int n = poset.size();
    std::vector<int> choice(n, 0);
    auto natural = [&] {
        for (int c = 0; c < n; ++c)
            for (int d : poset.up[c].indices())
                if (d != c && poset.refinement(c, d)[choice[d]] != choice[c]) return false;
        return true;
    };
    while (true) {
        if (natural()) return true;
        int pos = 0;
        while (pos < n) {
            if (++choice[pos] < poset.contexts[pos].atom_count()) break;
            choice[pos++] = 0;
        }
        if (pos == n) return false;
    }
}

// Brute-force Heyting implication: descending search over all 2^k candidates
// per context for the largest x with embed(x, D) /\ u(D) <= v(D).
inline SpectralOpen implication_oracle(const SpectralOpen& u, const SpectralOpen& v) {
    const ContextPoset& poset = *u.poset;
    SpectralOpen r = sopen_bottom(poset);
    for (int c = 0; c < poset.size(); ++c) {
        uint64_t full = full_atom_mask(poset.contexts[c]);
        uint64_t best = 0;
        for (uint64_t x = 0; x <= full; ++x) {
            bool good = true;
            for (int d : poset.up[c].indices()) {
                LatticeElement e = embed(poset, LatticeElement{c, x}, d);
                if ((e.atoms & u.values[d]) & ~v.values[d]) {
                    good = false;
                    break;
                }
            }
            // the candidates are closed under join, so their union is the
            // largest candidate
            if (good) best |= x;
        }
        r.values[c] = best;
    }
    return r;
}

// All spectral opens of a small poset (DFS over monotone assignments).
inline std::vector<SpectralOpen> enumerate_spectral_opens(const ContextPoset& poset,
                                                          size_t cap = 200000) {
    std::vector<SpectralOpen> out;
    SpectralOpen cur = sopen_bottom(poset);
    std::vector<int> order(poset.size());
    for (int i = 0; i < poset.size(); ++i) order[i] = i;  // coarse-first by construction
    std::function<void(int)> rec = [&](int pos) {
        if (out.size() > cap) throw std::runtime_error("spectral open enumeration too large");
        if (pos == poset.size()) {
            out.push_back(cur);
            return;
        }
        int c = order[pos];
        uint64_t full = full_atom_mask(poset.contexts[c]);
        for (uint64_t mask = 0; mask <= full; ++mask) {
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev) {
                int d = order[prev];
                if (poset.leq(d, c)) {
                    LatticeElement e = embed(poset, LatticeElement{d, cur.values[d]}, c);
                    ok = (e.atoms & ~mask) == 0;
                }
            }
            if (!ok) continue;
            cur.values[c] = mask;
            rec(pos + 1);
        }
        cur.values[c] = 0;
    };
    rec(0);
    return out;
}

inline const ComplexMatrix& pauli_x() {
    static ComplexMatrix m = [] {
        ComplexMatrix x(2);
        x(0, 1) = 1;
        x(1, 0) = 1;
        return x;
    }();
    return m;
}

inline HermitianMatrix sigma_x() { return HermitianMatrix(pauli_x()); }
inline HermitianMatrix sigma_z() { return HermitianMatrix::diag({1, -1}); }

}  // namespace oracles
