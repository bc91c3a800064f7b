// gen.hpp — seeded generators shared by the test suites.
#pragma once

#include <cmath>
#include <vector>

#include "mub/cxla.hpp"
#include "mub/rng.hpp"

namespace testgen {

inline mub::CVector random_unit_vector(int d, mub::SplitMix64& rng) {
    std::vector<mub::Complex> v(d);
    for (int j = 0; j < d; ++j) v[j] = mub::Complex(rng.gaussian(), rng.gaussian());
    mub::CVector out(std::move(v));
    const double nrm = out.norm();
    for (int j = 0; j < d; ++j) out[j] /= nrm;
    return out;
}

inline std::vector<mub::CVector> random_unit_vectors(int d, int n, mub::SplitMix64& rng) {
    std::vector<mub::CVector> vs;
    for (int i = 0; i < n; ++i) vs.push_back(random_unit_vector(d, rng));
    return vs;
}

inline mub::HermitianMatrix random_hermitian(int n, mub::SplitMix64& rng) {
    mub::HermitianMatrix m = mub::HermitianMatrix::zero(n);
    for (int j = 0; j < n; ++j) {
        m.set(j, j, rng.gaussian());
        for (int k = j + 1; k < n; ++k) m.set(j, k, mub::Complex(rng.gaussian(), rng.gaussian()));
    }
    return m;
}

// Orthonormal set of r vectors in dimension n (Gram-Schmidt on Gaussians).
inline std::vector<mub::CVector> random_orthonormal(int n, int r, mub::SplitMix64& rng) {
    std::vector<mub::CVector> cols;
    for (int c = 0; c < r; ++c) {
        std::vector<mub::Complex> raw(n);
        for (int j = 0; j < n; ++j) raw[j] = mub::Complex(rng.gaussian(), rng.gaussian());
        mub::CVector col(std::move(raw));
        for (int pass = 0; pass < 2; ++pass) {
            for (const mub::CVector& prev : cols) {
                const mub::Complex proj = mub::inner(prev, col);
                for (int j = 0; j < n; ++j) col[j] -= proj * prev[j];
            }
        }
        const double nrm = col.norm();
        for (int j = 0; j < n; ++j) col[j] /= nrm;
        cols.push_back(std::move(col));
    }
    return cols;
}

// scalar * (rank-r orthogonal projection) in dimension n.
inline mub::HermitianMatrix random_projection_multiple(int n, int r, double scalar,
                                                       mub::SplitMix64& rng) {
    const std::vector<mub::CVector> cols = random_orthonormal(n, r, rng);
    mub::HermitianMatrix m = mub::HermitianMatrix::zero(n);
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            mub::Complex acc = 0.0;
            for (const mub::CVector& c : cols) acc += c[j] * std::conj(c[k]);
            m.set(j, k, scalar * acc);
        }
    }
    return m;
}

// A + eps * H with H a random Hermitian of unit-scale entries.
inline mub::HermitianMatrix perturb_hermitian(const mub::HermitianMatrix& a, double eps,
                                              mub::SplitMix64& rng) {
    const int n = a.size();
    mub::HermitianMatrix m = mub::HermitianMatrix::zero(n);
    for (int j = 0; j < n; ++j) {
        m.set(j, j, a(j, j).real() + eps * rng.gaussian());
        for (int k = j + 1; k < n; ++k)
            m.set(j, k, a(j, k) + eps * mub::Complex(rng.gaussian(), rng.gaussian()));
    }
    return m;
}

}  // namespace testgen
