#include "bohr/context.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>

namespace bohr {

std::vector<double> Context::span_coefficients(const HermitianMatrix& a) const {
    if (a.dim() != dim) throw DimensionMismatch();
    std::vector<double> coeff(atoms.size());
    ComplexMatrix recon(dim);
    for (size_t i = 0; i < atoms.size(); ++i) {
        coeff[i] = (atoms[i].p.m * a.m).trace().real() / double(atoms[i].rank);
        recon = recon + coeff[i] * atoms[i].p.m;
    }
    double scale = std::max(1.0, a.m.frobenius_norm());
    if (frobenius_distance(recon, a.m) > tol().herm * scale)
        throw NotInContext("observable is not in the span of context '" + label + "'");
    return coeff;
}

bool Context::in_span(const HermitianMatrix& a) const {
    try {
        span_coefficients(a);
        return true;
    } catch (const NotInContext&) {
        return false;
    }
}

std::string atom_key(const ProjectionMatrix& p) {
    std::string key;
    key.reserve(size_t(p.dim()) * p.dim() * 22 + 8);
    char buf[32];
    std::snprintf(buf, sizeof buf, "r%d:", p.rank);
    key += buf;
    for (const Complex& z : p.p.m.a) {
        double re = std::round(z.real() * 1e6) / 1e6;
        double im = std::round(z.imag() * 1e6) / 1e6;
        if (re == 0) re = 0;  // normalize -0
        if (im == 0) im = 0;
        std::snprintf(buf, sizeof buf, "%.6f,%.6f;", re, im);
        key += buf;
    }
    return key;
}

static void sort_atoms(std::vector<ProjectionMatrix>& atoms) {
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const ProjectionMatrix& x, const ProjectionMatrix& y) {
                         if (x.rank != y.rank) return x.rank < y.rank;
                         return atom_key(x) < atom_key(y);
                     });
}

std::string context_key(const Context& c) {
    std::string key;
    for (const ProjectionMatrix& p : c.atoms) key += atom_key(p) + "|";
    return key;
}

Context trivial_context(int dim, std::string label) {
    Context c;
    c.dim = dim;
    c.label = std::move(label);
    c.atoms.push_back(ProjectionMatrix(HermitianMatrix::identity(dim)));
    return c;
}

Context make_context(std::vector<ProjectionMatrix> atoms, std::string label) {
    if (atoms.empty()) throw InputError("context needs at least one atom");
    int dim = atoms[0].dim();
    ComplexMatrix sum(dim);
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].dim() != dim) throw DimensionMismatch("atom dimensions differ");
        if (atoms[i].rank < 1) throw InputError("context atom has rank zero");
        sum = sum + atoms[i].p.m;
        for (size_t j = i + 1; j < atoms.size(); ++j) {
            if ((atoms[i].p.m * atoms[j].p.m).frobenius_norm() > tol().herm * dim)
                throw InputError("context atoms are not pairwise orthogonal");
        }
    }
    if (frobenius_distance(sum, ComplexMatrix::identity(dim)) > tol().herm * dim)
        throw InputError("context atoms do not sum to the identity");
    sort_atoms(atoms);
    Context c;
    c.dim = dim;
    c.atoms = std::move(atoms);
    c.label = std::move(label);
    return c;
}

Context context_from_basis(const std::vector<std::vector<Complex>>& basis, std::string label) {
    if (basis.empty()) throw InputError("empty basis");
    int dim = int(basis[0].size());
    std::vector<ProjectionMatrix> atoms;
    for (const auto& v : basis) {
        if (int(v.size()) != dim) throw DimensionMismatch("basis vector length differs");
        double n2 = 0;
        for (const Complex& z : v) n2 += std::norm(z);
        if (n2 <= 0) throw InputError("zero basis vector");
        double inv = 1.0 / std::sqrt(n2);
        ComplexMatrix p(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) p(i, j) = (v[i] * inv) * std::conj(v[j] * inv);
        atoms.push_back(ProjectionMatrix(HermitianMatrix(p)));
    }
    return make_context(std::move(atoms), std::move(label));
}

Context context_of(const HermitianMatrix& a, std::string label) {
    std::vector<ProjectionMatrix> atoms;
    for (SpectralCluster& c : spectral_clusters(a)) atoms.push_back(std::move(c.projection));
    if (label.empty()) label = "C*(a)";
    return make_context(std::move(atoms), std::move(label));
}

bool context_equal(const Context& c, const Context& d) {
    if (c.dim != d.dim || c.atoms.size() != d.atoms.size()) return false;
    std::vector<bool> used(d.atoms.size(), false);
    for (const ProjectionMatrix& p : c.atoms) {
        bool found = false;
        for (size_t j = 0; j < d.atoms.size(); ++j) {
            if (used[j] || d.atoms[j].rank != p.rank) continue;
            if (frobenius_distance(p.p.m, d.atoms[j].p.m) < tol().atom) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool includes(const Context& c, const Context& d) {
    if (c.dim != d.dim) throw DimensionMismatch();
    for (const ProjectionMatrix& p : c.atoms) {
        ComplexMatrix sum(c.dim);
        for (const ProjectionMatrix& q : d.atoms)
            if (projection_below(q, p)) sum = sum + q.p.m;
        if (frobenius_distance(sum, p.p.m) > tol().atom) return false;
    }
    return true;
}

namespace {
uint64_t g_intersect_seed = [] {
    if (const char* env = std::getenv("BOHR_SEED")) return uint64_t(std::strtoull(env, nullptr, 10));
    return uint64_t(0xB04);
}();
}  // namespace

uint64_t intersect_seed() { return g_intersect_seed; }
void set_intersect_seed(uint64_t seed) { g_intersect_seed = seed; }

// Hermitian matrices as real vectors; the real span of a context's atoms is
// a subspace of this space.
static Eigen::VectorXd herm_vec(const ComplexMatrix& m) {
    Eigen::VectorXd v(2 * m.dim * m.dim);
    for (int i = 0; i < m.dim * m.dim; ++i) {
        v(2 * i) = m.a[i].real();
        v(2 * i + 1) = m.a[i].imag();
    }
    return v;
}

Context intersect(const Context& c, const Context& d) {
    if (c.dim != d.dim) throw DimensionMismatch();
    int n = c.dim;
    int k1 = c.atom_count(), k2 = d.atom_count();

    // Nullspace of [span(c) | -span(d)]: each kernel vector (alpha|beta)
    // gives one element sum alpha_i p_i = sum beta_j q_j of both spans.
    Eigen::MatrixXd stacked(2 * n * n, k1 + k2);
    for (int i = 0; i < k1; ++i) stacked.col(i) = herm_vec(c.atoms[i].p.m);
    for (int j = 0; j < k2; ++j) stacked.col(k1 + j) = -herm_vec(d.atoms[j].p.m);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(stacked);
    lu.setThreshold(1e-9);
    Eigen::MatrixXd kernel = lu.kernel();
    int t = int(kernel.cols());
    if (t < 1) throw BohrError("span intersection lost the identity");  // cannot happen

    std::vector<ComplexMatrix> basis;
    for (int l = 0; l < t; ++l) {
        ComplexMatrix b(n);
        for (int i = 0; i < k1; ++i) b = b + kernel(i, l) * c.atoms[i].p.m;
        basis.push_back(b);
    }

    // A generic element of the intersection algebra has exactly t distinct
    // eigenvalues; its spectral projections are the atoms. Retried with fresh
    // coefficients on eigenvalue collisions.
    std::mt19937_64 rng(g_intersect_seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::uniform_int_distribution<int> coeff(1, 997);
        ComplexMatrix g(n);
        for (const ComplexMatrix& b : basis) g = g + (double(coeff(rng)) / 997.0) * b;
        ComplexMatrix sym(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sym(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
        HermitianMatrix h(sym);
        std::vector<SpectralCluster> clusters = spectral_clusters(h);
        if (int(clusters.size()) != t) continue;
        std::vector<ProjectionMatrix> atoms;
        for (SpectralCluster& cl : clusters) atoms.push_back(std::move(cl.projection));
        Context result = make_context(std::move(atoms), "meet(" + c.label + "," + d.label + ")");
        if (includes(result, c) && includes(result, d)) return result;
        // A collision merged two atoms that only looked degenerate; retry.
    }
    throw BohrError("intersect: generic element search failed for contexts '" + c.label +
                    "' and '" + d.label + "'");
}

}  // namespace bohr
