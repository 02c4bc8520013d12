#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/rational.hpp"

namespace bohr {

using Complex = std::complex<double>;

// Module-wide tolerances. Defaults follow the desk-scale calibration: inputs
// are small rational matrices, so doubles leave several digits of headroom.
// The CLI may override these once at startup, before any computation.
struct Tolerances {
    double herm = 1e-9;     // Hermiticity / projection checks, relative
    double eig = 1e-9;      // eigendecomposition residuals, relative
    double order = 1e-9;    // positivity order slack, absolute
    double cluster = 1e-7;  // eigenvalue clustering, relative
    double atom = 1e-7;     // projector Frobenius distance for atom equality
    double strict = 1e-9;   // margin for strict inequalities lambda > r
    double prob = 1e-9;     // slack in the "probability one" test
    double near_miss = 1e-6;  // near-miss warning band for probabilities
};
Tolerances& tol();

// Dense square complex matrix, row-major.
struct ComplexMatrix {
    int dim = 0;
    std::vector<Complex> a;  // dim*dim entries

    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : dim(n), a(size_t(n) * n, Complex(0, 0)) {}

    Complex& operator()(int i, int j) { return a[size_t(i) * dim + j]; }
    const Complex& operator()(int i, int j) const { return a[size_t(i) * dim + j]; }

    static ComplexMatrix identity(int n);
    static ComplexMatrix diag(const std::vector<double>& d);

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;

    bool operator==(const ComplexMatrix& o) const { return dim == o.dim && a == o.a; }
};

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(Complex s, const ComplexMatrix& x);
ComplexMatrix operator*(double s, const ComplexMatrix& x);

double frobenius_distance(const ComplexMatrix& x, const ComplexMatrix& y);

// Hermitian matrix; the constructor enforces A = A* within tol().herm
// relative to the matrix norm.
struct HermitianMatrix {
    ComplexMatrix m;

    HermitianMatrix() = default;
    explicit HermitianMatrix(ComplexMatrix mm);

    int dim() const { return m.dim; }
    static HermitianMatrix identity(int n) { return HermitianMatrix(ComplexMatrix::identity(n)); }
    static HermitianMatrix diag(const std::vector<double>& d) {
        return HermitianMatrix(ComplexMatrix::diag(d));
    }
};

HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y);
HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y);
HermitianMatrix operator*(double s, const HermitianMatrix& x);

// Orthogonal projection with cached rank. Validated idempotent within
// tol().herm and integer trace.
struct ProjectionMatrix {
    HermitianMatrix p;
    int rank = 0;

    ProjectionMatrix() = default;
    explicit ProjectionMatrix(HermitianMatrix h);

    int dim() const { return p.dim(); }
};

// q <= p in the projection order, i.e. pq = q, within tol().atom.
bool projection_below(const ProjectionMatrix& q, const ProjectionMatrix& p);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns are the matching orthonormal eigenvectors
};

// Deterministic Hermitian eigendecomposition (values ascending).
EigenDecomposition eigen(const HermitianMatrix& a);

// Groups the (ascending) eigenvalues into clusters whose members are within
// tol().cluster relative to the matrix scale; returns {value, projection}
// per cluster. Prevents spurious context atoms from roundoff.
struct SpectralCluster {
    double value;  // representative (mean of the cluster)
    ProjectionMatrix projection;
};
std::vector<SpectralCluster> spectral_clusters(const HermitianMatrix& a);

// Sum of eigenprojections for the eigenvalues inside the open interval.
ProjectionMatrix spectral_projection(const HermitianMatrix& a, const RationalInterval& iv);

// a <= b in the positive-semidefinite order: min eig of b-a >= -tol().order.
bool is_positive_leq(const HermitianMatrix& a, const HermitianMatrix& b);

// p a p restricted to range(p), written on an orthonormal basis of range(p).
// Output dimension is rank(p).
HermitianMatrix compress(const HermitianMatrix& a, const ProjectionMatrix& p);

double min_eigenvalue(const HermitianMatrix& a);
double max_eigenvalue(const HermitianMatrix& a);

}  // namespace bohr
