#include "bohr/matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace bohr {

Tolerances& tol() {
    static Tolerances t;
    return t;
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<double>& d) {
    ComplexMatrix m(int(d.size()));
    for (int i = 0; i < m.dim; ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (int i = 0; i < dim; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0;
    for (const Complex& z : a) s += std::norm(z);
    return std::sqrt(s);
}

static void check_same_dim(int a, int b) {
    if (a != b)
        throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x.dim, y.dim);
    ComplexMatrix r(x.dim);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x.dim, y.dim);
    ComplexMatrix r(x.dim);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x.dim, y.dim);
    int n = x.dim;
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Complex v = x(i, k);
            if (v == Complex(0, 0)) continue;
            for (int j = 0; j < n; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& x) {
    ComplexMatrix r = x;
    for (Complex& z : r.a) z *= s;
    return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& x) { return Complex(s, 0) * x; }

double frobenius_distance(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x.dim, y.dim);
    double s = 0;
    for (size_t i = 0; i < x.a.size(); ++i) s += std::norm(x.a[i] - y.a[i]);
    return std::sqrt(s);
}

HermitianMatrix::HermitianMatrix(ComplexMatrix mm) : m(std::move(mm)) {
    double scale = std::max(1.0, m.frobenius_norm());
    if (frobenius_distance(m, m.adjoint()) > tol().herm * scale)
        throw NonHermitianInput();
}

HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y) {
    return HermitianMatrix(x.m + y.m);
}
HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y) {
    return HermitianMatrix(x.m - y.m);
}
HermitianMatrix operator*(double s, const HermitianMatrix& x) {
    return HermitianMatrix(s * x.m);
}

ProjectionMatrix::ProjectionMatrix(HermitianMatrix h) : p(std::move(h)) {
    double scale = std::max(1.0, p.m.frobenius_norm());
    if (frobenius_distance(p.m * p.m, p.m) > tol().herm * scale)
        throw BohrError("projection is not idempotent");
    double tr = p.m.trace().real();
    rank = int(std::lround(tr));
    if (std::abs(tr - rank) > tol().eig * scale || rank < 0)
        throw BohrError("projection trace is not a nonnegative integer");
}

bool projection_below(const ProjectionMatrix& q, const ProjectionMatrix& p) {
    return frobenius_distance(p.p.m * q.p.m, q.p.m) <= tol().atom;
}

static Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd e(m.dim, m.dim);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) e(i, j) = m(i, j);
    return e;
}

EigenDecomposition eigen(const HermitianMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a.m));
    if (solver.info() != Eigen::Success) throw BohrError("eigendecomposition failed");
    int n = a.dim();
    EigenDecomposition d;
    d.values.resize(n);
    d.vectors = ComplexMatrix(n);
    for (int j = 0; j < n; ++j) {
        d.values[j] = solver.eigenvalues()(j);
        for (int i = 0; i < n; ++i) d.vectors(i, j) = solver.eigenvectors()(i, j);
    }
    return d;
}

// Rank-deficient sums of v v* over a column subset.
static ComplexMatrix outer_sum(const ComplexMatrix& vectors, const std::vector<int>& cols) {
    int n = vectors.dim;
    ComplexMatrix r(n);
    for (int c : cols)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r(i, j) += vectors(i, c) * std::conj(vectors(j, c));
    return r;
}

std::vector<SpectralCluster> spectral_clusters(const HermitianMatrix& a) {
    EigenDecomposition d = eigen(a);
    int n = a.dim();
    double scale = 1.0;
    for (double v : d.values) scale = std::max(scale, std::abs(v));
    double gap = tol().cluster * scale;

    std::vector<SpectralCluster> out;
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && d.values[j + 1] - d.values[j] <= gap) ++j;
        std::vector<int> cols;
        double mean = 0;
        for (int k = i; k <= j; ++k) {
            cols.push_back(k);
            mean += d.values[k];
        }
        mean /= double(cols.size());
        out.push_back({mean, ProjectionMatrix(HermitianMatrix(outer_sum(d.vectors, cols)))});
        i = j + 1;
    }
    return out;
}

ProjectionMatrix spectral_projection(const HermitianMatrix& a, const RationalInterval& iv) {
    EigenDecomposition d = eigen(a);
    std::vector<int> cols;
    for (int k = 0; k < a.dim(); ++k) {
        double v = d.values[k];
        if (iv.lo && !(v > to_double(*iv.lo))) continue;
        if (iv.hi && !(v < to_double(*iv.hi))) continue;
        cols.push_back(k);
    }
    return ProjectionMatrix(HermitianMatrix(outer_sum(d.vectors, cols)));
}

bool is_positive_leq(const HermitianMatrix& a, const HermitianMatrix& b) {
    check_same_dim(a.dim(), b.dim());
    return min_eigenvalue(b - a) >= -tol().order;
}

HermitianMatrix compress(const HermitianMatrix& a, const ProjectionMatrix& p) {
    check_same_dim(a.dim(), p.dim());
    if (p.rank == 0) throw ZeroRankProjection();
    // Orthonormal basis of range(p) = eigenvectors with eigenvalue 1,
    // i.e. the last rank(p) columns of p's ascending eigensystem.
    EigenDecomposition d = eigen(p.p);
    int n = a.dim(), r = p.rank;
    ComplexMatrix out(r);
    for (int bi = 0; bi < r; ++bi)
        for (int bj = 0; bj < r; ++bj) {
            Complex s = 0;
            for (int i = 0; i < n; ++i) {
                Complex av = 0;
                for (int j = 0; j < n; ++j) av += a.m(i, j) * d.vectors(j, n - r + bj);
                s += std::conj(d.vectors(i, n - r + bi)) * av;
            }
            out(bi, bj) = s;
        }
    // Symmetrize away roundoff so the result passes the Hermitian check.
    ComplexMatrix sym(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sym(i, j) = 0.5 * (out(i, j) + std::conj(out(j, i)));
    return HermitianMatrix(sym);
}

double min_eigenvalue(const HermitianMatrix& a) {
    return eigen(a).values.front();
}

double max_eigenvalue(const HermitianMatrix& a) {
    return eigen(a).values.back();
}

}  // namespace bohr
