// cxla.hpp — self-contained dense complex linear algebra sized for systems of
// at most a few hundred vectors: inner products, Gram matrices, Hermitian
// eigenvalues (cyclic Jacobi), numerical rank, projector arithmetic.
//
// All reductions run in a fixed left-to-right order so results are
// reproducible run to run.
#pragma once

#include <complex>
#include <vector>

#include "mub/errors.hpp"

namespace mub {

using Complex = std::complex<double>;

// ------------------------------ vectors -------------------------------------

class CVector {
public:
    CVector() = default;
    explicit CVector(std::vector<Complex> entries);  // rejects NaN/Inf entries
    static CVector zero(int dim);

    int dim() const { return static_cast<int>(e_.size()); }
    const Complex& operator[](int i) const { return e_[i]; }
    Complex& operator[](int i) { return e_[i]; }

    double norm() const;
    const std::vector<Complex>& entries() const { return e_; }

private:
    std::vector<Complex> e_;
};

bool operator==(const CVector& a, const CVector& b);

/// <u,v> = sum_x conj(u[x]) v[x]; conjugate-linear in the first argument.
Complex inner(const CVector& u, const CVector& v);

/// |<u,v>|^2
double overlap2(const CVector& u, const CVector& v);

// ------------------------------ matrices ------------------------------------

// Square complex matrix holding a value that is Hermitian within
// hermiticity_tol. set() mirrors entries, so matrices assembled through it are
// conjugate-symmetric exactly.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    // Validates conjugate symmetry and real diagonal within tol.
    HermitianMatrix(int size, std::vector<Complex> entries, double hermiticity_tol = 1e-12);
    static HermitianMatrix zero(int size);
    static HermitianMatrix identity(int size);

    int size() const { return n_; }
    const Complex& operator()(int j, int k) const { return a_[static_cast<std::size_t>(j) * n_ + k]; }
    // Stores v at (j,k) and conj(v) at (k,j); diagonal values are forced real.
    void set(int j, int k, Complex v);

    double trace() const;  // diagonal is real by invariant
    double frobenius_norm() const;
    double max_abs() const;
    const std::vector<Complex>& raw() const { return a_; }

private:
    int n_ = 0;
    std::vector<Complex> a_;  // row-major, n_ * n_
};

struct SpectrumResult {
    std::vector<double> eigenvalues;  // sorted descending
    double residual = 0.0;            // max_i ||M v_i - lambda_i v_i||_2
};

struct Eigensystem {
    std::vector<double> eigenvalues;  // sorted descending
    std::vector<CVector> eigenvectors;
    double residual = 0.0;
};

struct ProjectionMultiple {
    bool is_multiple = false;
    double scalar = 0.0;
};

// ------------------------------ operations ----------------------------------

/// Gram matrix G[j][k] = inner(v_j, v_k); positive semidefinite by construction.
HermitianMatrix gram(const std::vector<CVector>& vs);

/// Hilbert-Schmidt inner product tr(A* B).
Complex hs_inner(const HermitianMatrix& A, const HermitianMatrix& B);

/// All eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
/// residual_tol <= 0 selects 1e-8 * size * max(1, max|entry|). Throws
/// NumericalFailure if the sweep cap is hit or the residual exceeds the bound.
SpectrumResult hermitian_eigenvalues(const HermitianMatrix& M, double residual_tol = 0.0);

/// Same solver, but also accumulates eigenvectors; residual is computed from
/// the original matrix.
Eigensystem hermitian_eigensystem(const HermitianMatrix& M, double residual_tol = 0.0);

/// Count of eigenvalues with |lambda| > rel_tol * max(1, max|lambda|).
int numerical_rank(const HermitianMatrix& M, double rel_tol = 1e-8);

/// |b><b| - I/d for a unit vector b; traceless by construction.
HermitianMatrix projector_traceless(const CVector& b);

/// True iff the distinct eigenvalues of M are contained in {0, s} for a single
/// s != 0 (or M = 0, reported with scalar 0). Clustering is relative to the
/// spectral radius.
ProjectionMultiple is_projection_multiple(const HermitianMatrix& M, double tol = 1e-8);

/// M * M (Hermitian for Hermitian M).
HermitianMatrix herm_square(const HermitianMatrix& M);

/// Entrywise max |A - B|.
double max_abs_diff(const HermitianMatrix& A, const HermitianMatrix& B);

}  // namespace mub
