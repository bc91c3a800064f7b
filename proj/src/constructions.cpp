// constructions.cpp
#include "mub/constructions.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "mub/gf.hpp"

namespace mub {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

const Complex kFourthRoots[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

bool is_supported_dim(int d) {
    for (int s : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
        if (d == s) return true;
    }
    return false;
}

// d = p^k for the supported odd prime powers
std::pair<int, int> factor_prime_power(int d) {
    for (int p = 2; p <= d; ++p) {
        if (d % p != 0) continue;
        int k = 0;
        int m = d;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        return {p, k};
    }
    throw Unsupported("factor_prime_power: not a prime power");
}

std::vector<std::vector<CVector>> mub_bases_odd(int d) {
    const auto [p, k] = factor_prime_power(d);
    const gf::FieldSpec f = gf::FieldSpec::make(p, k);
    const std::vector<gf::FieldElement> elems = gf::enumerate_field(f);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Complex> roots(p);
    for (int j = 0; j < p; ++j) roots[j] = std::polar(1.0, kTwoPi * j / p);

    std::vector<std::vector<CVector>> bases;
    for (const gf::FieldElement& a : elems) {
        std::vector<CVector> basis;
        for (const gf::FieldElement& b : elems) {
            std::vector<Complex> v(d);
            for (int xi = 0; xi < d; ++xi) {
                const gf::FieldElement& x = elems[xi];
                const gf::FieldElement quad = gf::field_mul(f, a, gf::field_mul(f, x, x));
                const gf::FieldElement lin = gf::field_mul(f, b, x);
                const int e = gf::field_trace(f, gf::field_add(f, quad, lin));
                v[xi] = scale * roots[e];
            }
            basis.push_back(CVector(std::move(v)));
        }
        bases.push_back(std::move(basis));
    }
    bases.push_back(standard_basis(d));
    return bases;
}

std::vector<std::vector<CVector>> mub_bases_even(int d) {
    int k = 0;
    for (int m = d; m > 1; m /= 2) ++k;
    const gf::GaloisRingSpec r = gf::GaloisRingSpec::make(k);
    const std::vector<gf::RingElement> teich = gf::teichmuller_set(r);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));

    std::vector<std::vector<CVector>> bases;
    for (const gf::RingElement& a : teich) {
        std::vector<CVector> basis;
        for (const gf::RingElement& b : teich) {
            const gf::RingElement phase_elem = gf::gr4_add(r, a, gf::gr4_scalar_mul(r, 2, b));
            std::vector<Complex> v(d);
            for (int xi = 0; xi < d; ++xi) {
                const int e = gf::gr4_trace(r, gf::gr4_mul(r, phase_elem, teich[xi]));
                v[xi] = scale * kFourthRoots[e];
            }
            basis.push_back(CVector(std::move(v)));
        }
        bases.push_back(std::move(basis));
    }
    bases.push_back(standard_basis(d));
    return bases;
}

std::vector<std::vector<CVector>> mub_bases_two() {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    std::vector<std::vector<CVector>> bases;
    bases.push_back(standard_basis(2));
    bases.push_back({CVector({s, s}), CVector({s, -s})});
    bases.push_back({CVector({s, s * i}), CVector({s, -s * i})});
    return bases;
}

}  // namespace

// ------------------------------ MubSystem ------------------------------------

MubSystem::MubSystem(int d, std::vector<std::vector<CVector>> bases)
    : d_(d), bases_(std::move(bases)) {
    if (d_ < 1) throw InvalidInput("MubSystem: dimension must be positive");
    if (bases_.size() != static_cast<std::size_t>(d_) + 1)
        throw InvalidInput("MubSystem: expected d+1 bases");
    const double tol = kUnitNormTol;
    for (const auto& basis : bases_) {
        if (basis.size() != static_cast<std::size_t>(d_))
            throw InvalidInput("MubSystem: basis has wrong size");
        for (int j = 0; j < d_; ++j) {
            if (basis[j].dim() != d_) throw InvalidInput("MubSystem: vector dimension mismatch");
            if (std::abs(basis[j].norm() - 1.0) > tol)
                throw InvalidInput("MubSystem: basis vector is not unit length");
            for (int l = j + 1; l < d_; ++l) {
                if (std::abs(inner(basis[j], basis[l])) > tol)
                    throw InvalidInput("MubSystem: basis is not orthogonal");
            }
        }
    }
    const double target = 1.0 / d_;
    for (std::size_t a = 0; a < bases_.size(); ++a) {
        for (std::size_t b = a + 1; b < bases_.size(); ++b) {
            for (const CVector& e : bases_[a]) {
                for (const CVector& g : bases_[b]) {
                    if (std::abs(overlap2(e, g) - target) > tol)
                        throw InvalidInput("MubSystem: bases are not unbiased");
                }
            }
        }
    }
}

UnitVectorSystem flatten(const MubSystem& m) {
    std::vector<CVector> vectors;
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m.bases().size(); ++a) {
        for (std::size_t j = 0; j < m.bases()[a].size(); ++j) {
            vectors.push_back(m.bases()[a][j]);
            labels.push_back("B" + std::to_string(a) + "[" + std::to_string(j) + "]");
        }
    }
    return UnitVectorSystem(m.d(), std::move(vectors), std::move(labels));
}

MubSystem complete_mub(int d) {
    if (!is_supported_dim(d))
        throw Unsupported("complete_mub: dimension " + std::to_string(d) + " not supported");
    if (d == 2) return MubSystem(2, mub_bases_two());
    if ((d & (d - 1)) == 0) return MubSystem(d, mub_bases_even(d));
    return MubSystem(d, mub_bases_odd(d));
}

// --------------------------- SIC-POVM machinery ------------------------------

UnitVectorSystem weyl_heisenberg_orbit(const CVector& fiducial) {
    const int m = fiducial.dim();
    if (m < 2) throw InvalidInput("weyl_heisenberg_orbit: dimension must be at least 2");
    if (std::abs(fiducial.norm() - 1.0) > kUnitNormTol)
        throw InvalidInput("weyl_heisenberg_orbit: fiducial must have unit norm");
    std::vector<Complex> roots(m);
    for (int j = 0; j < m; ++j) roots[j] = std::polar(1.0, kTwoPi * j / m);

    std::vector<CVector> vectors;
    std::vector<std::string> labels;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            // (X^a Z^b f)[x] = w^(b ((x-a) mod m)) f[(x-a) mod m]
            std::vector<Complex> v(m);
            for (int x = 0; x < m; ++x) {
                const int y = ((x - a) % m + m) % m;
                v[x] = roots[(b * y) % m] * fiducial[y];
            }
            vectors.push_back(CVector(std::move(v)));
            labels.push_back("wh(" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    return UnitVectorSystem(m, std::move(vectors), std::move(labels));
}

CVector sic_fiducial(int m) {
    if (m == 2) {
        const double r3 = std::sqrt(3.0);
        const double a = std::sqrt((3.0 + r3) / 6.0);
        const double b = std::sqrt((3.0 - r3) / 6.0);
        return CVector({Complex(a, 0.0), std::polar(b, kTwoPi / 8.0)});
    }
    if (m == 3) {
        const double s = 1.0 / std::sqrt(2.0);
        return CVector({Complex(0.0, 0.0), Complex(s, 0.0), Complex(-s, 0.0)});
    }
    throw Unsupported("sic_fiducial: only m in {2, 3} is supported");
}

UnitVectorSystem sic_embed(const UnitVectorSystem& sic, double tol) {
    const int m = sic.d();
    if (sic.n() != m * m) throw InvalidInput("sic_embed: expected m^2 vectors in dimension m");
    const double target = 1.0 / (m + 1);
    for (int j = 0; j < sic.n(); ++j) {
        for (int k = j + 1; k < sic.n(); ++k) {
            if (std::abs(overlap2(sic.vector(j), sic.vector(k)) - target) > tol)
                throw InvalidInput("sic_embed: input overlaps are not 1/(m+1)");
        }
    }
    std::vector<CVector> vectors;
    for (const CVector& v : sic.vectors()) {
        std::vector<Complex> w = v.entries();
        w.push_back(Complex(0.0, 0.0));
        vectors.push_back(CVector(std::move(w)));
    }
    return UnitVectorSystem(m + 1, std::move(vectors), sic.labels());
}

std::vector<CVector> standard_basis(int d) {
    if (d < 1) throw InvalidInput("standard_basis: dimension must be positive");
    std::vector<CVector> basis;
    for (int j = 0; j < d; ++j) {
        CVector e = CVector::zero(d);
        e[j] = 1.0;
        basis.push_back(std::move(e));
    }
    return basis;
}

}  // namespace mub
