// gf.hpp — GF(p^k) arithmetic in the polynomial basis, plus the Galois ring
// GR(4,k) machinery (Frobenius lift, trace, Teichmuller representatives) used
// by the even prime-power basis construction.
#pragma once

#include <vector>

#include "mub/errors.hpp"

namespace mub::gf {

// ------------------------------ GF(p^k) -------------------------------------

// Field description: prime p, extension degree k, monic irreducible modulus of
// degree k over F_p (coefficients ascending, length k+1).
class FieldSpec {
public:
    FieldSpec(int p, int k, std::vector<int> modulus);
    // Pinned default moduli: GF(4): t^2+t+1, GF(8): t^3+t+1, GF(9): t^2+1,
    // GF(25): t^2+2, GF(27): t^3+2t+1; k = 1 uses modulus t.
    static FieldSpec make(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    long q() const { return q_; }  // p^k
    const std::vector<int>& modulus() const { return modulus_; }

private:
    int p_ = 0;
    int k_ = 0;
    long q_ = 0;
    std::vector<int> modulus_;
};

// Polynomial-basis element: k residues mod p, ascending degree.
struct FieldElement {
    std::vector<int> coeffs;
};

bool operator==(const FieldElement& a, const FieldElement& b);
bool operator!=(const FieldElement& a, const FieldElement& b);

FieldElement fe_zero(const FieldSpec& f);
FieldElement fe_one(const FieldSpec& f);
/// The class of t (requires k >= 2).
FieldElement fe_gen(const FieldSpec& f);
/// Embeds the residue c mod p as a constant.
FieldElement fe_scalar(const FieldSpec& f, int c);

FieldElement field_add(const FieldSpec& f, const FieldElement& x, const FieldElement& y);
FieldElement field_neg(const FieldSpec& f, const FieldElement& x);
FieldElement field_sub(const FieldSpec& f, const FieldElement& x, const FieldElement& y);
FieldElement field_mul(const FieldSpec& f, const FieldElement& x, const FieldElement& y);
/// Throws InvalidInput for x = 0.
FieldElement field_inv(const FieldSpec& f, const FieldElement& x);
FieldElement field_pow(const FieldSpec& f, const FieldElement& x, long e);

/// Absolute trace sum_{i<k} x^(p^i), returned as a residue in [0, p).
int field_trace(const FieldSpec& f, const FieldElement& x);

/// All q elements, zero first, in base-p counting order on the coefficient
/// vector (least significant coefficient cycles fastest). Requires q <= 2^16.
std::vector<FieldElement> enumerate_field(const FieldSpec& f);

// ------------------------------ GR(4,k) -------------------------------------

// Galois ring description: monic degree-k modulus over Z4 whose mod-2
// reduction is irreducible over F_2.
class GaloisRingSpec {
public:
    GaloisRingSpec(int k, std::vector<int> modulus);
    // Pinned Hensel lifts of the default GF(2^k) moduli:
    // k=1: t+3, k=2: t^2+t+1, k=3: t^3+2t^2+t+3, k=4: t^4+2t^2+3t+1.
    static GaloisRingSpec make(int k);

    int k() const { return k_; }
    const std::vector<int>& modulus() const { return modulus_; }

private:
    int k_ = 0;
    std::vector<int> modulus_;
};

// k residues mod 4, ascending degree.
struct RingElement {
    std::vector<int> coeffs;
};

bool operator==(const RingElement& a, const RingElement& b);
bool operator!=(const RingElement& a, const RingElement& b);

RingElement gr4_zero(const GaloisRingSpec& r);
RingElement gr4_one(const GaloisRingSpec& r);
RingElement gr4_add(const GaloisRingSpec& r, const RingElement& x, const RingElement& y);
RingElement gr4_sub(const GaloisRingSpec& r, const RingElement& x, const RingElement& y);
RingElement gr4_mul(const GaloisRingSpec& r, const RingElement& x, const RingElement& y);
RingElement gr4_scalar_mul(const GaloisRingSpec& r, int c, const RingElement& x);

/// The Frobenius lift: the unique ring automorphism reducing to x -> x^2 on
/// the residue field. Acts as a + 2b -> a^2 + 2b^2 on the Teichmuller
/// decomposition.
RingElement gr4_frobenius(const GaloisRingSpec& r, const RingElement& x);

/// sum_{i<k} phi^i(x), a scalar in Z4.
int gr4_trace(const GaloisRingSpec& r, const RingElement& x);

/// The 2^k Teichmuller representatives {x : x^(2^k) = x}, ordered by the
/// enumeration of their mod-2 reductions (zero first). Closed under the
/// Frobenius lift.
std::vector<RingElement> teichmuller_set(const GaloisRingSpec& r);

}  // namespace mub::gf
