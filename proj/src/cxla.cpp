// cxla.cpp
#include "mub/cxla.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mub {

namespace {

bool finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

// ------------------------------ CVector -------------------------------------

CVector::CVector(std::vector<Complex> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw InvalidInput("CVector: dimension must be positive");
    for (const Complex& z : e_) {
        if (!finite(z)) throw InvalidInput("CVector: entries must be finite");
    }
}

CVector CVector::zero(int dim) {
    if (dim <= 0) throw InvalidInput("CVector: dimension must be positive");
    return CVector(std::vector<Complex>(static_cast<std::size_t>(dim)));
}

double CVector::norm() const {
    double s = 0.0;
    for (const Complex& z : e_) s += std::norm(z);
    return std::sqrt(s);
}

bool operator==(const CVector& a, const CVector& b) {
    return a.entries() == b.entries();
}

Complex inner(const CVector& u, const CVector& v) {
    if (u.dim() != v.dim()) throw InvalidInput("inner: dimension mismatch");
    Complex s = 0.0;
    for (int x = 0; x < u.dim(); ++x) s += std::conj(u[x]) * v[x];
    return s;
}

double overlap2(const CVector& u, const CVector& v) {
    return std::norm(inner(u, v));
}

// --------------------------- HermitianMatrix --------------------------------

HermitianMatrix::HermitianMatrix(int size, std::vector<Complex> entries, double hermiticity_tol)
    : n_(size), a_(std::move(entries)) {
    if (n_ <= 0) throw InvalidInput("HermitianMatrix: size must be positive");
    if (a_.size() != static_cast<std::size_t>(n_) * n_)
        throw InvalidInput("HermitianMatrix: entry count does not match size");
    for (const Complex& z : a_) {
        if (!finite(z)) throw InvalidInput("HermitianMatrix: entries must be finite");
    }
    for (int j = 0; j < n_; ++j) {
        if (std::abs(a_[static_cast<std::size_t>(j) * n_ + j].imag()) > hermiticity_tol)
            throw InvalidInput("HermitianMatrix: diagonal not real within tolerance");
        for (int k = j + 1; k < n_; ++k) {
            const Complex diff =
                a_[static_cast<std::size_t>(j) * n_ + k] - std::conj(a_[static_cast<std::size_t>(k) * n_ + j]);
            if (std::abs(diff) > hermiticity_tol)
                throw InvalidInput("HermitianMatrix: not Hermitian within tolerance");
        }
    }
}

HermitianMatrix HermitianMatrix::zero(int size) {
    if (size <= 0) throw InvalidInput("HermitianMatrix: size must be positive");
    HermitianMatrix m;
    m.n_ = size;
    m.a_.assign(static_cast<std::size_t>(size) * size, Complex(0.0, 0.0));
    return m;
}

HermitianMatrix HermitianMatrix::identity(int size) {
    HermitianMatrix m = zero(size);
    for (int j = 0; j < size; ++j) m.set(j, j, 1.0);
    return m;
}

void HermitianMatrix::set(int j, int k, Complex v) {
    if (j == k) {
        a_[static_cast<std::size_t>(j) * n_ + j] = Complex(v.real(), 0.0);
    } else {
        a_[static_cast<std::size_t>(j) * n_ + k] = v;
        a_[static_cast<std::size_t>(k) * n_ + j] = std::conj(v);
    }
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (int j = 0; j < n_; ++j) t += a_[static_cast<std::size_t>(j) * n_ + j].real();
    return t;
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double HermitianMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
}

// ------------------------------ operations ----------------------------------

HermitianMatrix gram(const std::vector<CVector>& vs) {
    if (vs.empty()) throw InvalidInput("gram: empty vector list");
    const int dim = vs.front().dim();
    for (const CVector& v : vs) {
        if (v.dim() != dim) throw InvalidInput("gram: vectors must share a dimension");
    }
    const int n = static_cast<int>(vs.size());
    HermitianMatrix g = HermitianMatrix::zero(n);
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) g.set(j, k, inner(vs[j], vs[k]));
    }
    return g;
}

Complex hs_inner(const HermitianMatrix& A, const HermitianMatrix& B) {
    if (A.size() != B.size()) throw InvalidInput("hs_inner: size mismatch");
    // tr(A* B) = sum over entries conj(A[j][k]) B[j][k]
    Complex s = 0.0;
    const std::size_t total = A.raw().size();
    for (std::size_t i = 0; i < total; ++i) s += std::conj(A.raw()[i]) * B.raw()[i];
    return s;
}

namespace {

struct JacobiState {
    std::vector<double> diag;      // eigenvalues in rotated order
    std::vector<double> colres;    // off-diagonal column norms of the final matrix
    std::vector<Complex> vectors;  // column eigenvectors, row-major n*n; empty unless requested
    int n = 0;
};

// Cyclic Jacobi for complex Hermitian matrices. Each rotation annihilates one
// off-diagonal entry with the unitary
//   U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]],  a_pq = |a_pq| e^{i phi},
// where (c, s) is the classic symmetric Jacobi pair for [[a_pp, |a_pq|],
// [|a_pq|, a_qq]]. Sweeps run in fixed row-major pivot order; off-diagonal
// Frobenius threshold 1e-13 * ||M||_F (floored at the rounding level for large
// sizes), sweep cap 100.
JacobiState jacobi_diagonalize(const HermitianMatrix& M, bool want_vectors) {
    const int n = M.size();
    std::vector<Complex> a(M.raw());
    std::vector<Complex> v;
    if (want_vectors) {
        v.assign(static_cast<std::size_t>(n) * n, Complex(0.0, 0.0));
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j) * n + j] = 1.0;
    }
    auto at = [&](int j, int k) -> Complex& { return a[static_cast<std::size_t>(j) * n + k]; };

    double fro = 0.0;
    for (const Complex& z : a) fro += std::norm(z);
    fro = std::sqrt(fro);

    const double eps = std::numeric_limits<double>::epsilon();
    const double stop = std::max(1e-13, 4.0 * n * eps) * fro;
    const double skip = stop / (2.0 * std::max(1, n));
    const int max_sweeps = 100;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) s += 2.0 * std::norm(at(j, k));
        return std::sqrt(s);
    };

    double off = off_norm();
    int sweep = 0;
    while (off > stop) {
        if (sweep++ >= max_sweeps)
            throw NumericalFailure("hermitian_eigenvalues: Jacobi sweep cap reached", off);
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = at(p, q);
                const double m = std::abs(apq);
                if (m <= skip) continue;
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                const double theta = (aqq - app) / (2.0 * m);
                const double t = theta >= 0.0 ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                              : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex ebar = std::conj(apq) / m;  // e^{-i phi}
                const Complex se = s * ebar;

                for (int j = 0; j < n; ++j) {
                    if (j == p || j == q) continue;
                    const Complex mjp = at(j, p);
                    const Complex mjq = at(j, q);
                    const Complex njp = c * mjp - se * mjq;
                    const Complex njq = s * mjp + c * ebar * mjq;
                    at(j, p) = njp;
                    at(p, j) = std::conj(njp);
                    at(j, q) = njq;
                    at(q, j) = std::conj(njq);
                }
                at(p, p) = app - t * m;
                at(q, q) = aqq + t * m;
                at(p, q) = 0.0;
                at(q, p) = 0.0;

                if (want_vectors) {
                    for (int j = 0; j < n; ++j) {
                        const Complex vjp = v[static_cast<std::size_t>(j) * n + p];
                        const Complex vjq = v[static_cast<std::size_t>(j) * n + q];
                        v[static_cast<std::size_t>(j) * n + p] = c * vjp - se * vjq;
                        v[static_cast<std::size_t>(j) * n + q] = s * vjp + c * ebar * vjq;
                    }
                }
            }
        }
        off = off_norm();
    }

    JacobiState st;
    st.n = n;
    st.diag.resize(n);
    st.colres.resize(n);
    for (int i = 0; i < n; ++i) {
        st.diag[i] = at(i, i).real();
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j != i) s += std::norm(at(j, i));
        }
        st.colres[i] = std::sqrt(s);
    }
    st.vectors = std::move(v);
    return st;
}

std::vector<int> descending_order(const std::vector<double>& vals) {
    std::vector<int> idx(vals.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return vals[a] > vals[b]; });
    return idx;
}

double auto_residual_tol(const HermitianMatrix& M, double residual_tol) {
    if (residual_tol > 0.0) return residual_tol;
    return 1e-8 * M.size() * std::max(1.0, M.max_abs());
}

}  // namespace

SpectrumResult hermitian_eigenvalues(const HermitianMatrix& M, double residual_tol) {
    const JacobiState st = jacobi_diagonalize(M, /*want_vectors=*/false);
    SpectrumResult r;
    r.eigenvalues.reserve(st.diag.size());
    for (int i : descending_order(st.diag)) {
        r.eigenvalues.push_back(st.diag[i]);
        r.residual = std::max(r.residual, st.colres[i]);
    }
    const double tol = auto_residual_tol(M, residual_tol);
    if (r.residual > tol)
        throw NumericalFailure("hermitian_eigenvalues: residual above tolerance", r.residual);
    return r;
}

Eigensystem hermitian_eigensystem(const HermitianMatrix& M, double residual_tol) {
    const JacobiState st = jacobi_diagonalize(M, /*want_vectors=*/true);
    const int n = st.n;
    Eigensystem r;
    for (int i : descending_order(st.diag)) {
        r.eigenvalues.push_back(st.diag[i]);
        std::vector<Complex> col(n);
        for (int j = 0; j < n; ++j) col[j] = st.vectors[static_cast<std::size_t>(j) * n + i];
        r.eigenvectors.push_back(CVector(std::move(col)));
    }
    for (int i = 0; i < n; ++i) {
        // || M v - lambda v || against the original matrix
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            Complex acc = 0.0;
            for (int k = 0; k < n; ++k) acc += M(j, k) * r.eigenvectors[i][k];
            acc -= r.eigenvalues[i] * r.eigenvectors[i][j];
            s += std::norm(acc);
        }
        r.residual = std::max(r.residual, std::sqrt(s));
    }
    const double tol = auto_residual_tol(M, residual_tol);
    if (r.residual > tol)
        throw NumericalFailure("hermitian_eigensystem: residual above tolerance", r.residual);
    return r;
}

int numerical_rank(const HermitianMatrix& M, double rel_tol) {
    const SpectrumResult sp = hermitian_eigenvalues(M);
    double scale = 0.0;
    for (double l : sp.eigenvalues) scale = std::max(scale, std::abs(l));
    const double cut = rel_tol * std::max(1.0, scale);
    int r = 0;
    for (double l : sp.eigenvalues) {
        if (std::abs(l) > cut) ++r;
    }
    return r;
}

HermitianMatrix projector_traceless(const CVector& b) {
    const double nrm = b.norm();
    if (std::abs(nrm - 1.0) > 1e-9)
        throw InvalidInput("projector_traceless: vector must have unit norm");
    const int d = b.dim();
    HermitianMatrix x = HermitianMatrix::zero(d);
    const double inv_d = 1.0 / d;
    for (int j = 0; j < d; ++j) {
        x.set(j, j, std::norm(b[j]) - inv_d);
        for (int k = j + 1; k < d; ++k) x.set(j, k, b[j] * std::conj(b[k]));
    }
    return x;
}

ProjectionMultiple is_projection_multiple(const HermitianMatrix& M, double tol) {
    const SpectrumResult sp = hermitian_eigenvalues(M);
    double scale = 0.0;
    for (double l : sp.eigenvalues) scale = std::max(scale, std::abs(l));
    if (scale == 0.0) return {true, 0.0};
    const double cut = tol * scale;
    double lo = 0.0, hi = 0.0, sum = 0.0;
    int count = 0;
    for (double l : sp.eigenvalues) {
        if (std::abs(l) <= cut) continue;  // zero cluster
        if (count == 0) {
            lo = hi = l;
        } else {
            lo = std::min(lo, l);
            hi = std::max(hi, l);
        }
        sum += l;
        ++count;
    }
    if (count == 0) return {true, 0.0};
    if (hi - lo > cut) return {false, 0.0};
    return {true, sum / count};
}

HermitianMatrix herm_square(const HermitianMatrix& M) {
    const int n = M.size();
    HermitianMatrix c = HermitianMatrix::zero(n);
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            Complex acc = 0.0;
            for (int l = 0; l < n; ++l) acc += M(j, l) * M(l, k);
            c.set(j, k, acc);
        }
    }
    return c;
}

double max_abs_diff(const HermitianMatrix& A, const HermitianMatrix& B) {
    if (A.size() != B.size()) throw InvalidInput("max_abs_diff: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < A.raw().size(); ++i)
        m = std::max(m, std::abs(A.raw()[i] - B.raw()[i]));
    return m;
}

}  // namespace mub
