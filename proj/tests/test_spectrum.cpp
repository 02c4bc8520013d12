#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bohr/site.hpp"
#include "bohr/spectrum.hpp"
#include "oracles.hpp"

using namespace bohr;
using oracles::random_hermitian;
using oracles::sigma_x;
using oracles::sigma_z;

static ContextPoset v_poset() {
    return build_poset({context_of(sigma_z(), "Cz"), context_of(sigma_x(), "Cx")});
}

// Random element of the context's real span.
static HermitianMatrix random_in_span(const Context& c, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2, 2);
    ComplexMatrix m(c.dim);
    for (const ProjectionMatrix& p : c.atoms) m = m + u(rng) * p.p.m;
    return HermitianMatrix(m);
}

TEST_CASE("generator frozen cases") {
    ContextPoset poset = v_poset();
    int cz = poset.index_of_label("Cz");

    // D_1 = top
    CHECK(generator(poset, cz, HermitianMatrix::identity(2)).atoms ==
          full_atom_mask(poset.contexts[cz]));
    // D_{-p} = bottom for an atom p
    HermitianMatrix minus_atom(-1.0 * poset.contexts[cz].atoms[0].p.m);
    CHECK(generator(poset, cz, minus_atom).atoms == 0);
    // diagonal sign filter
    LatticeElement d = generator(poset, cz, sigma_z());
    CHECK(__builtin_popcountll(d.atoms) == 1);
    // the selected atom carries eigenvalue +1 of sigma_z, i.e. projects onto e_0
    int p = __builtin_ctzll(d.atoms);
    CHECK(poset.contexts[cz].atoms[p].p.m(0, 0).real() == doctest::Approx(1));

    CHECK_THROWS_AS(generator(poset, cz, sigma_x()), NotInContext);
}

TEST_CASE("spectrum relations hold for generator images") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 40; ++rep) {
        int dim = 2 + int(rng() % 3);
        Context c = context_of(random_hermitian(dim, rng), "C");
        ContextPoset poset = build_poset({c});
        int ci = poset.index_of_label("C");
        const Context& ctx = poset.contexts[ci];
        HermitianMatrix a = random_in_span(ctx, rng), b = random_in_span(ctx, rng);

        uint64_t top = full_atom_mask(ctx);
        auto D = [&](const HermitianMatrix& h) { return generator(poset, ci, h).atoms; };

        CHECK(D(HermitianMatrix::identity(dim)) == top);             // D_1 = T
        CHECK((D(a) & D(HermitianMatrix(-1.0 * a.m))) == 0);         // D_a /\ D_-a = B
        CHECK(D(HermitianMatrix(-1.0 * (b.m * b.m))) == 0);          // D_{-b^2} = B
        CHECK((D(a + b) & ~(D(a) | D(b))) == 0);                     // D_{a+b} <= D_a \/ D_b
        uint64_t dab = D(HermitianMatrix(a.m * b.m));
        HermitianMatrix na(-1.0 * a.m), nb(-1.0 * b.m);
        CHECK(dab == ((D(a) & D(b)) | (D(na) & D(nb))));             // product rule
    }
}

TEST_CASE("regularity rule collapses at finite spectrum") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 25; ++rep) {
        int dim = 2 + int(rng() % 3);
        Context c = context_of(random_hermitian(dim, rng), "C");
        ContextPoset poset = build_poset({c});
        int ci = poset.index_of_label("C");
        HermitianMatrix a = random_in_span(poset.contexts[ci], rng);
        std::vector<double> coeff = poset.contexts[ci].span_coefficients(a);
        double minpos = 1e18;
        for (double l : coeff)
            if (l > tol().order) minpos = std::min(minpos, l);
        if (minpos > 1e17 || minpos < 1e-6) continue;  // no usable positive part

        uint64_t da = generator(poset, ci, a).atoms;
        auto shifted = [&](double q) {
            return generator(poset, ci, a - q * HermitianMatrix::identity(dim)).atoms;
        };
        // below the gap: D_{a-q} = D_a on a q-grid
        for (double f : {0.1, 0.5, 0.9}) CHECK(shifted(f * minpos) == da);
        // above the smallest positive coefficient the open shrinks strictly
        CHECK(shifted(minpos * 1.0001) != da);
        CHECK((shifted(minpos * 1.0001) & ~da) == 0);
    }
}

TEST_CASE("embed frozen cases and lattice-embedding property") {
    Context fine = context_of(HermitianMatrix::diag({0, 1, 2}), "fine");
    Context coarse = context_of(HermitianMatrix::diag({0, 1, 1}), "coarse");
    ContextPoset poset = build_poset({coarse, fine});
    int ci = poset.index_of_label("coarse"), fi = poset.index_of_label("fine");

    // identity embedding
    LatticeElement x{ci, 1};
    CHECK(embed(poset, x, ci).atoms == x.atoms);
    // top maps to top
    LatticeElement top{ci, full_atom_mask(poset.contexts[ci])};
    CHECK(embed(poset, top, fi).atoms == full_atom_mask(poset.contexts[fi]));
    // the rank-2 coarse atom decomposes into two fine atoms
    int rank2 = -1;
    for (int p = 0; p < poset.contexts[ci].atom_count(); ++p)
        if (poset.contexts[ci].atoms[p].rank == 2) rank2 = p;
    REQUIRE(rank2 >= 0);
    LatticeElement e2{ci, uint64_t(1) << rank2};
    CHECK(__builtin_popcountll(embed(poset, e2, fi).atoms) == 2);

    CHECK_THROWS_AS(embed(poset, LatticeElement{fi, 1}, ci), NotComparable);

    // embedding preserves meets and joins
    for (uint64_t a = 0; a < 4; ++a)
        for (uint64_t b = 0; b < 4; ++b) {
            uint64_t ma = embed(poset, LatticeElement{ci, a}, fi).atoms;
            uint64_t mb = embed(poset, LatticeElement{ci, b}, fi).atoms;
            CHECK(embed(poset, LatticeElement{ci, a & b}, fi).atoms == (ma & mb));
            CHECK(embed(poset, LatticeElement{ci, a | b}, fi).atoms == (ma | mb));
        }
}

TEST_CASE("spectrum_cover is the join cover") {
    ContextPoset poset = v_poset();
    int cz = poset.index_of_label("Cz");
    LatticeElement p0{cz, 1}, p1{cz, 2}, top{cz, 3};
    CHECK(spectrum_cover(poset, cz, p0, {p0}));            // membership
    CHECK(spectrum_cover(poset, cz, top, {p0, p1}));       // join of atoms is top
    CHECK_FALSE(spectrum_cover(poset, cz, p0, {p1}));      // different atom
}

TEST_CASE("Heyting operations: frozen excluded-middle failure") {
    ContextPoset poset = v_poset();
    int cz = poset.index_of_label("Cz"), cx = poset.index_of_label("Cx");

    SpectralOpen u = sopen_bottom(poset);
    u.values[cz] = full_atom_mask(poset.contexts[cz]);
    REQUIRE(is_monotone(u));

    SpectralOpen nu = sopen_not(u);
    CHECK(nu.values[poset.bottom] == 0);
    CHECK(nu.values[cz] == 0);
    CHECK(nu.values[cx] == full_atom_mask(poset.contexts[cx]));

    SpectralOpen lem = sopen_join(u, nu);
    CHECK(lem != sopen_top(poset));  // u \/ ~u != T: intuitionistic, not Boolean

    // basic identities
    CHECK(sopen_implies(u, u) == sopen_top(poset));
    CHECK(sopen_meet(sopen_top(poset), u) == u);
    CHECK(sopen_join(sopen_bottom(poset), u) == u);
}

TEST_CASE("frame laws and adjunction, exhaustive on small posets") {
    ContextPoset poset = v_poset();
    std::vector<SpectralOpen> all = oracles::enumerate_spectral_opens(poset);
    CHECK(all.size() == 17);  // 16 pairs over bottom=empty plus the all-top map

    for (const SpectralOpen& u : all) {
        CHECK(is_monotone(u));
        for (const SpectralOpen& v : all) {
            CHECK(is_monotone(sopen_meet(u, v)));
            CHECK(is_monotone(sopen_join(u, v)));
            SpectralOpen imp = sopen_implies(u, v);
            CHECK(is_monotone(imp));
            CHECK(imp == oracles::implication_oracle(u, v));
            for (const SpectralOpen& w : all) {
                // distributivity
                CHECK(sopen_meet(u, sopen_join(v, w)) ==
                      sopen_join(sopen_meet(u, v), sopen_meet(u, w)));
                // Heyting adjunction
                CHECK(sopen_leq(w, imp) == sopen_leq(sopen_meet(w, u), v));
            }
        }
    }

    // the all-members distributive law: u /\ \/ v_i = \/ (u /\ v_i)
    for (const SpectralOpen& u : all) {
        SpectralOpen big = sopen_bottom(poset), dist = sopen_bottom(poset);
        for (const SpectralOpen& v : all) {
            big = sopen_join(big, v);
            dist = sopen_join(dist, sopen_meet(u, v));
        }
        CHECK(sopen_meet(u, big) == dist);
    }
}

TEST_CASE("Heyting adjunction on random triples over a random dim-3 poset") {
    std::mt19937_64 rng(47);
    ContextPoset poset = build_poset({context_of(random_hermitian(3, rng), "A"),
                                      context_of(random_hermitian(3, rng), "B")});
    std::vector<SpectralOpen> all = oracles::enumerate_spectral_opens(poset);
    REQUIRE(all.size() >= 3);
    for (int rep = 0; rep < 1000; ++rep) {
        const SpectralOpen& x = all[rng() % all.size()];
        const SpectralOpen& y = all[rng() % all.size()];
        const SpectralOpen& z = all[rng() % all.size()];
        SpectralOpen imp = sopen_implies(y, z);
        CHECK(sopen_leq(x, imp) == sopen_leq(sopen_meet(x, y), z));
        CHECK(imp == oracles::implication_oracle(y, z));
    }
}

TEST_CASE("single-context spectrum is the classical powerset") {
    Context c = context_of(HermitianMatrix::diag({0, 1, 2}), "C");
    ContextPoset poset = build_poset({c});
    CHECK(poset.size() == 2);
    std::vector<SpectralOpen> all = oracles::enumerate_spectral_opens(poset);
    // restricted above C the opens are exactly the subsets of the three atoms:
    // each of the 8 masks occurs, with the bottom context forced except at top
    int count_with_bottom_empty = 0;
    for (const SpectralOpen& u : all)
        if (u.values[poset.bottom] == 0) ++count_with_bottom_empty;
    CHECK(count_with_bottom_empty == 8);

    // oracle equivalence: the regular ideals of L_C form the same powerset
    IdealLattice r = regular_ideals(spectral_lattice(poset.contexts[1]));
    CHECK(r.frame.n == 8);
}

TEST_CASE("spectral lattices are strongly normal and satisfy lemma l23") {
    std::mt19937_64 rng(53);
    for (int atoms = 1; atoms <= 4; ++atoms) {
        // exhaustive strong normality for contexts with <= 4 atoms
        std::vector<double> diag(atoms);
        for (int i = 0; i < atoms; ++i) diag[i] = i;
        Context c = context_of(HermitianMatrix::diag(diag), "C");
        FiniteLattice lc = spectral_lattice(c);
        CHECK(is_strongly_normal(lc));
        CHECK(is_normal(lc));
    }

    // lemma l23: D_b well inside D_a iff D_b <= D_{a-q} for small positive q
    for (int rep = 0; rep < 30; ++rep) {
        int dim = 2 + int(rng() % 3);
        Context c = context_of(random_hermitian(dim, rng), "C");
        ContextPoset poset = build_poset({c});
        int ci = poset.index_of_label("C");
        const Context& ctx = poset.contexts[ci];
        FiniteLattice lc = spectral_lattice(ctx);
        HermitianMatrix a = random_in_span(ctx, rng), b = random_in_span(ctx, rng);
        uint64_t da = generator(poset, ci, a).atoms, db = generator(poset, ci, b).atoms;

        std::vector<double> coeff = ctx.span_coefficients(a);
        double minpos = 1e18;
        for (double l : coeff)
            if (l > tol().order) minpos = std::min(minpos, l);
        if (minpos < 1e-6) continue;  // degenerate positive part, q would drown in epsilon
        double q = (minpos > 1e17) ? 1.0 : 0.5 * minpos;
        uint64_t daq =
            generator(poset, ci, a - q * HermitianMatrix::identity(dim)).atoms;

        bool wi = well_inside(lc, int(db), int(da));
        bool shift = (db & ~daq) == 0;
        CHECK(wi == shift);
    }
}

TEST_CASE("pi_sigma_star frozen cases and preservation") {
    ContextPoset poset = v_poset();
    int cz = poset.index_of_label("Cz"), cx = poset.index_of_label("Cx");

    CHECK(pi_sigma_star(poset, poset.bottom) == sopen_top(poset));
    SpectralOpen at_cz = pi_sigma_star(poset, cz);
    CHECK(at_cz.values[cz] == full_atom_mask(poset.contexts[cz]));
    CHECK(at_cz.values[poset.bottom] == 0);
    CHECK(at_cz.values[cx] == 0);
    CHECK(is_monotone(at_cz));
    CHECK_THROWS_AS(pi_sigma_star(poset, 99), IndexOutOfRange);

    // preservation of meets and joins of (unions/intersections of) principal
    // upper sets
    for (int d = 0; d < poset.size(); ++d)
        for (int e = 0; e < poset.size(); ++e) {
            UpperSet ud = principal_up(poset, d), ue = principal_up(poset, e);
            ud.base = poset.bottom;
            ue.base = poset.bottom;
            UpperSet meet{poset.bottom, ud.members & ue.members};
            UpperSet join{poset.bottom, ud.members | ue.members};
            CHECK(pi_sigma_star(poset, meet) ==
                  sopen_meet(pi_sigma_star(poset, d), pi_sigma_star(poset, e)));
            CHECK(pi_sigma_star(poset, join) ==
                  sopen_join(pi_sigma_star(poset, d), pi_sigma_star(poset, e)));
        }
}

TEST_CASE("poset mismatch is rejected") {
    ContextPoset p1 = v_poset(), p2 = v_poset();
    CHECK_THROWS_AS(sopen_meet(sopen_top(p1), sopen_top(p2)), PosetMismatch);
}
