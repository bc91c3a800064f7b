// constructions.hpp — generators for complete MUB systems (prime-power d),
// Weyl-Heisenberg orbits of SIC fiducials, and the pairwise-unbiased
// zero-padding embedding. Generator output is meant to be checked by the
// rigidity verifier, not trusted.
#pragma once

#include "mub/system.hpp"

namespace mub {

// d+1 orthonormal bases of C^d, pairwise unbiased. Construction validates
// both properties within kUnitNormTol.
class MubSystem {
public:
    MubSystem(int d, std::vector<std::vector<CVector>> bases);

    int d() const { return d_; }
    const std::vector<std::vector<CVector>>& bases() const { return bases_; }

private:
    int d_ = 0;
    std::vector<std::vector<CVector>> bases_;
};

/// Concatenates the bases into one system of n = d(d+1) labeled vectors.
UnitVectorSystem flatten(const MubSystem& m);

/// Complete MUB system for prime-power d in {2,3,4,5,7,8,9,11,13,16,25,27}.
///
/// Odd prime power q = p^k: bases B_a, a in GF(q), with components
///   v_{a,b}[x] = q^{-1/2} w_p^{trace(a x^2 + b x)},  w_p = exp(2 pi i / p),
/// plus the standard basis. Even d = 2^k: bases indexed by the Teichmuller set
/// of GR(4,k) with v_{a,b}[x] = q^{-1/2} i^{trace((a + 2b) x)}, plus the
/// standard basis. d = 2 is the hardcoded standard/Hadamard/circular triple.
/// Throws Unsupported for any other d.
MubSystem complete_mub(int d);

/// The m^2 vectors X^a Z^b f for a, b in {0..m-1} in (a,b) lexicographic
/// order, where X is the cyclic shift (X v)[x] = v[(x-1) mod m] and Z the
/// clock (Z v)[x] = w_m^x v[x]. Requires a unit fiducial of dimension >= 2.
UnitVectorSystem weyl_heisenberg_orbit(const CVector& fiducial);

/// Pinned SIC fiducial vectors for m in {2, 3}; their Weyl-Heisenberg orbits
/// have all pairwise overlaps |<.,.>|^2 = 1/(m+1).
CVector sic_fiducial(int m);

/// Appends a zero coordinate to each vector of an m-dimensional SIC (m^2
/// vectors, pairwise overlaps 1/(m+1) within tol), producing m^2 pairwise
/// unbiased unit vectors in C^{m+1}.
UnitVectorSystem sic_embed(const UnitVectorSystem& sic, double tol = 1e-9);

/// The d canonical coordinate vectors.
std::vector<CVector> standard_basis(int d);

}  // namespace mub
