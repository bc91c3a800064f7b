// gf.cpp
#include "mub/gf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace mub::gf {

namespace {

// --------------------- polynomials over F_p (ascending) ---------------------

using Poly = std::vector<int>;

int mod_p(long v, int p) {
    long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = mod_p(c[i + j] + static_cast<long>(a[i]) * b[j], p);
    return trim(c);
}

Poly poly_sub(const Poly& a, const Poly& b, int p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int av = i < a.size() ? a[i] : 0;
        const int bv = i < b.size() ? b[i] : 0;
        c[i] = mod_p(static_cast<long>(av) - bv, p);
    }
    return trim(c);
}

int inv_mod_p(int a, int p) {
    // extended Euclid on integers
    long t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
    while (new_r != 0) {
        const long quot = r / new_r;
        const long next_t = t - quot * new_t;
        const long next_r = r - quot * new_r;
        t = new_t;
        new_t = next_t;
        r = new_r;
        new_r = next_r;
    }
    if (r != 1) throw InvalidInput("inv_mod_p: not invertible");
    return mod_p(t, p);
}

// a mod m (m nonzero)
Poly poly_rem(Poly a, const Poly& m, int p) {
    a = trim(std::move(a));
    const int dm = degree(m);
    const int lead_inv = inv_mod_p(m.back(), p);
    while (degree(a) >= dm && !a.empty()) {
        const int shift = degree(a) - dm;
        const int factor = mod_p(static_cast<long>(a.back()) * lead_inv, p);
        for (int i = 0; i <= dm; ++i)
            a[i + shift] = mod_p(a[i + shift] - static_cast<long>(factor) * m[i], p);
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_powmod(Poly base, long e, const Poly& m, int p) {
    Poly result{1};
    base = poly_rem(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) result = poly_rem(poly_mul(result, base, p), m, p);
        base = poly_rem(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return result;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

int poly_eval(const Poly& f, int x, int p) {
    long acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = mod_p(acc * x + *it, p);
    return static_cast<int>(acc);
}

// x^(p^m) mod f, by m successive p-th powers
Poly frobenius_power(const Poly& f, int m, int p) {
    Poly y{0, 1};
    for (int i = 0; i < m; ++i) y = poly_powmod(std::move(y), p, f, p);
    return y;
}

// Rabin: f of degree k is irreducible iff x^(p^k) = x mod f and, for every
// prime r | k, gcd(x^(p^(k/r)) - x, f) = 1.
bool irreducible_rabin(const Poly& f, int p) {
    const int k = degree(f);
    const Poly x{0, 1};
    if (poly_sub(frobenius_power(f, k, p), x, p) != Poly{}) return false;
    for (int r = 2, rem = k; r <= rem; ++r) {
        if (rem % r != 0) continue;
        while (rem % r == 0) rem /= r;
        Poly g = poly_gcd(f, poly_sub(frobenius_power(f, k / r, p), x, p), p);
        if (degree(g) != 0) return false;
    }
    return true;
}

// Exhaustive root / low-degree factor test, valid for k <= 4.
bool irreducible_exhaustive(const Poly& f, int p) {
    const int k = degree(f);
    for (int x = 0; x < p; ++x) {
        if (poly_eval(f, x, p) == 0) return false;
    }
    if (k <= 3) return true;
    // k == 4: also exclude quadratic divisors
    for (int c0 = 0; c0 < p; ++c0) {
        for (int c1 = 0; c1 < p; ++c1) {
            const Poly q{c0, c1, 1};
            if (poly_rem(f, q, p).empty()) return false;
        }
    }
    return true;
}

bool is_irreducible(const Poly& f, int p) {
    const int k = degree(f);
    if (k < 1) return false;
    if (k == 1) return true;
    return k <= 4 ? irreducible_exhaustive(f, p) : irreducible_rabin(f, p);
}

Poly reduce_coeffs(const std::vector<int>& coeffs, int p) {
    Poly out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = mod_p(coeffs[i], p);
    return out;
}

}  // namespace

// ------------------------------ FieldSpec ------------------------------------

FieldSpec::FieldSpec(int p, int k, std::vector<int> modulus) : p_(p), k_(k) {
    if (p < 2 || !is_prime(p)) throw InvalidInput("FieldSpec: p must be prime");
    if (k < 1) throw InvalidInput("FieldSpec: k must be positive");
    if (modulus.size() != static_cast<std::size_t>(k) + 1)
        throw InvalidInput("FieldSpec: modulus must have degree k");
    modulus_ = reduce_coeffs(modulus, p);
    if (modulus_.back() != 1) throw InvalidInput("FieldSpec: modulus must be monic");
    if (!is_irreducible(modulus_, p)) throw InvalidInput("FieldSpec: modulus must be irreducible");
    q_ = 1;
    for (int i = 0; i < k; ++i) {
        if (q_ > (1L << 55) / p) throw InvalidInput("FieldSpec: field too large");
        q_ *= p;
    }
}

FieldSpec FieldSpec::make(int p, int k) {
    static const std::map<std::pair<int, int>, std::vector<int>> pinned = {
        {{2, 2}, {1, 1, 1}},        // t^2 + t + 1
        {{2, 3}, {1, 1, 0, 1}},     // t^3 + t + 1
        {{2, 4}, {1, 1, 0, 0, 1}},  // t^4 + t + 1
        {{3, 2}, {1, 0, 1}},        // t^2 + 1
        {{3, 3}, {1, 2, 0, 1}},     // t^3 + 2t + 1
        {{5, 2}, {2, 0, 1}},        // t^2 + 2
    };
    if (k == 1) return FieldSpec(p, 1, {0, 1});
    if (auto it = pinned.find({p, k}); it != pinned.end()) return FieldSpec(p, k, it->second);
    // smallest modulus in coefficient counting order
    long combos = 1;
    for (int i = 0; i < k; ++i) {
        if (combos > (1L << 55) / p) throw InvalidInput("FieldSpec::make: field too large");
        combos *= p;
    }
    for (long idx = 0; idx < combos; ++idx) {
        std::vector<int> mod(k + 1, 0);
        long v = idx;
        for (int i = 0; i < k; ++i) {
            mod[i] = static_cast<int>(v % p);
            v /= p;
        }
        mod[k] = 1;
        if (is_irreducible(mod, p)) return FieldSpec(p, k, mod);
    }
    throw InvalidInput("FieldSpec::make: no irreducible modulus found");
}

// ---------------------------- field elements ---------------------------------

bool operator==(const FieldElement& a, const FieldElement& b) { return a.coeffs == b.coeffs; }
bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

namespace {

void check_element(const FieldSpec& f, const FieldElement& x, const char* who) {
    if (x.coeffs.size() != static_cast<std::size_t>(f.k()))
        throw InvalidInput(std::string(who) + ": element has wrong length");
    for (int c : x.coeffs) {
        if (c < 0 || c >= f.p()) throw InvalidInput(std::string(who) + ": coefficient out of range");
    }
}

bool is_zero(const FieldElement& x) {
    return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](int c) { return c == 0; });
}

}  // namespace

FieldElement fe_zero(const FieldSpec& f) { return {std::vector<int>(f.k(), 0)}; }

FieldElement fe_one(const FieldSpec& f) {
    FieldElement x = fe_zero(f);
    x.coeffs[0] = 1;
    return x;
}

FieldElement fe_gen(const FieldSpec& f) {
    if (f.k() < 2) throw InvalidInput("fe_gen: requires extension degree >= 2");
    FieldElement x = fe_zero(f);
    x.coeffs[1] = 1;
    return x;
}

FieldElement fe_scalar(const FieldSpec& f, int c) {
    FieldElement x = fe_zero(f);
    x.coeffs[0] = mod_p(c, f.p());
    return x;
}

FieldElement field_add(const FieldSpec& f, const FieldElement& x, const FieldElement& y) {
    check_element(f, x, "field_add");
    check_element(f, y, "field_add");
    FieldElement z = fe_zero(f);
    for (int i = 0; i < f.k(); ++i) z.coeffs[i] = mod_p(x.coeffs[i] + y.coeffs[i], f.p());
    return z;
}

FieldElement field_neg(const FieldSpec& f, const FieldElement& x) {
    check_element(f, x, "field_neg");
    FieldElement z = fe_zero(f);
    for (int i = 0; i < f.k(); ++i) z.coeffs[i] = mod_p(-x.coeffs[i], f.p());
    return z;
}

FieldElement field_sub(const FieldSpec& f, const FieldElement& x, const FieldElement& y) {
    return field_add(f, x, field_neg(f, y));
}

FieldElement field_mul(const FieldSpec& f, const FieldElement& x, const FieldElement& y) {
    check_element(f, x, "field_mul");
    check_element(f, y, "field_mul");
    const int k = f.k();
    const int p = f.p();
    std::vector<long> conv(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) conv[i + j] += static_cast<long>(x.coeffs[i]) * y.coeffs[j];
    // reduce x^k = -(m_0 + m_1 x + ... + m_{k-1} x^{k-1})
    for (int i = 2 * k - 2; i >= k; --i) {
        const long c = mod_p(conv[i], p);
        if (c == 0) continue;
        for (int j = 0; j < k; ++j) conv[i - k + j] -= c * f.modulus()[j];
        conv[i] = 0;
    }
    FieldElement z = fe_zero(f);
    for (int i = 0; i < k; ++i) z.coeffs[i] = mod_p(conv[i], p);
    return z;
}

FieldElement field_inv(const FieldSpec& f, const FieldElement& x) {
    check_element(f, x, "field_inv");
    if (is_zero(x)) throw InvalidInput("field_inv: zero has no inverse");
    const int p = f.p();
    // extended Euclid over F_p[t] on (x, modulus)
    Poly r0 = trim(Poly(x.coeffs.begin(), x.coeffs.end()));
    Poly r1 = f.modulus();
    Poly s0{1}, s1{};
    while (!r1.empty()) {
        // r0 = q r1 + r, with coefficient arithmetic mod p
        Poly q;
        Poly rem = r0;
        const int d1 = degree(r1);
        const int lead_inv = inv_mod_p(r1.back(), p);
        while (degree(rem) >= d1 && !rem.empty()) {
            const int shift = degree(rem) - d1;
            const int factor = mod_p(static_cast<long>(rem.back()) * lead_inv, p);
            if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1, 0);
            q[shift] = factor;
            for (int i = 0; i <= d1; ++i)
                rem[i + shift] = mod_p(rem[i + shift] - static_cast<long>(factor) * r1[i], p);
            rem = trim(std::move(rem));
        }
        Poly s = poly_sub(s0, poly_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is the gcd, a nonzero constant since modulus is irreducible
    const int scale = inv_mod_p(r0[0], p);
    FieldElement z = fe_zero(f);
    for (std::size_t i = 0; i < s0.size(); ++i) z.coeffs[i] = mod_p(static_cast<long>(s0[i]) * scale, p);
    return z;
}

FieldElement field_pow(const FieldSpec& f, const FieldElement& x, long e) {
    check_element(f, x, "field_pow");
    if (e < 0) throw InvalidInput("field_pow: negative exponent");
    FieldElement result = fe_one(f);
    FieldElement base = x;
    while (e > 0) {
        if (e & 1) result = field_mul(f, result, base);
        base = field_mul(f, base, base);
        e >>= 1;
    }
    return result;
}

int field_trace(const FieldSpec& f, const FieldElement& x) {
    check_element(f, x, "field_trace");
    FieldElement acc = x;
    FieldElement y = x;
    for (int i = 1; i < f.k(); ++i) {
        y = field_pow(f, y, f.p());
        acc = field_add(f, acc, y);
    }
    for (int i = 1; i < f.k(); ++i) {
        if (acc.coeffs[i] != 0) throw std::logic_error("field_trace: result not in the prime field");
    }
    return acc.coeffs[0];
}

std::vector<FieldElement> enumerate_field(const FieldSpec& f) {
    if (f.q() > 65536) throw InvalidInput("enumerate_field: field larger than 2^16");
    std::vector<FieldElement> out;
    out.reserve(f.q());
    for (long idx = 0; idx < f.q(); ++idx) {
        FieldElement x = fe_zero(f);
        long v = idx;
        for (int i = 0; i < f.k(); ++i) {
            x.coeffs[i] = static_cast<int>(v % f.p());
            v /= f.p();
        }
        out.push_back(std::move(x));
    }
    return out;
}

// ------------------------------ GR(4,k) -------------------------------------

namespace {

int mod4(long v) {
    long r = v % 4;
    if (r < 0) r += 4;
    return static_cast<int>(r);
}

void check_ring_element(const GaloisRingSpec& r, const RingElement& x, const char* who) {
    if (x.coeffs.size() != static_cast<std::size_t>(r.k()))
        throw InvalidInput(std::string(who) + ": element has wrong length");
    for (int c : x.coeffs) {
        if (c < 0 || c > 3) throw InvalidInput(std::string(who) + ": coefficient out of range");
    }
}

// Teichmuller lift of the mod-2 class of x: k-fold squaring, which depends
// only on x mod 2 and lands on the unique fixed point of y -> y^(2^k) above it.
RingElement teich_lift(const GaloisRingSpec& r, const RingElement& x) {
    RingElement y = x;
    for (int i = 0; i < r.k(); ++i) y = gr4_mul(r, y, y);
    return y;
}

}  // namespace

GaloisRingSpec::GaloisRingSpec(int k, std::vector<int> modulus) : k_(k) {
    if (k < 1) throw InvalidInput("GaloisRingSpec: k must be positive");
    if (modulus.size() != static_cast<std::size_t>(k) + 1)
        throw InvalidInput("GaloisRingSpec: modulus must have degree k");
    modulus_.resize(modulus.size());
    for (std::size_t i = 0; i < modulus.size(); ++i) modulus_[i] = mod4(modulus[i]);
    if (modulus_.back() != 1) throw InvalidInput("GaloisRingSpec: modulus must be monic");
    Poly mod2(modulus_.size());
    for (std::size_t i = 0; i < modulus_.size(); ++i) mod2[i] = modulus_[i] % 2;
    if (!is_irreducible(mod2, 2))
        throw InvalidInput("GaloisRingSpec: mod-2 reduction must be irreducible");
}

GaloisRingSpec GaloisRingSpec::make(int k) {
    switch (k) {
        case 1: return GaloisRingSpec(1, {3, 1});
        case 2: return GaloisRingSpec(2, {1, 1, 1});
        case 3: return GaloisRingSpec(3, {3, 1, 2, 1});
        case 4: return GaloisRingSpec(4, {1, 3, 2, 0, 1});
        default: throw Unsupported("GaloisRingSpec::make: no pinned modulus for this degree");
    }
}

bool operator==(const RingElement& a, const RingElement& b) { return a.coeffs == b.coeffs; }
bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

RingElement gr4_zero(const GaloisRingSpec& r) { return {std::vector<int>(r.k(), 0)}; }

RingElement gr4_one(const GaloisRingSpec& r) {
    RingElement x = gr4_zero(r);
    x.coeffs[0] = 1;
    return x;
}

RingElement gr4_add(const GaloisRingSpec& r, const RingElement& x, const RingElement& y) {
    check_ring_element(r, x, "gr4_add");
    check_ring_element(r, y, "gr4_add");
    RingElement z = gr4_zero(r);
    for (int i = 0; i < r.k(); ++i) z.coeffs[i] = mod4(x.coeffs[i] + y.coeffs[i]);
    return z;
}

RingElement gr4_sub(const GaloisRingSpec& r, const RingElement& x, const RingElement& y) {
    check_ring_element(r, x, "gr4_sub");
    check_ring_element(r, y, "gr4_sub");
    RingElement z = gr4_zero(r);
    for (int i = 0; i < r.k(); ++i) z.coeffs[i] = mod4(x.coeffs[i] - y.coeffs[i]);
    return z;
}

RingElement gr4_mul(const GaloisRingSpec& r, const RingElement& x, const RingElement& y) {
    check_ring_element(r, x, "gr4_mul");
    check_ring_element(r, y, "gr4_mul");
    const int k = r.k();
    std::vector<long> conv(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) conv[i + j] += static_cast<long>(x.coeffs[i]) * y.coeffs[j];
    for (int i = 2 * k - 2; i >= k; --i) {
        const long c = mod4(conv[i]);
        if (c == 0) continue;
        for (int j = 0; j < k; ++j) conv[i - k + j] -= c * r.modulus()[j];
        conv[i] = 0;
    }
    RingElement z = gr4_zero(r);
    for (int i = 0; i < k; ++i) z.coeffs[i] = mod4(conv[i]);
    return z;
}

RingElement gr4_scalar_mul(const GaloisRingSpec& r, int c, const RingElement& x) {
    check_ring_element(r, x, "gr4_scalar_mul");
    RingElement z = gr4_zero(r);
    for (int i = 0; i < r.k(); ++i) z.coeffs[i] = mod4(static_cast<long>(c) * x.coeffs[i]);
    return z;
}

RingElement gr4_frobenius(const GaloisRingSpec& r, const RingElement& x) {
    check_ring_element(r, x, "gr4_frobenius");
    // x = a + 2b with a, b Teichmuller; phi(x) = a^2 + 2 b^2
    const RingElement a = teich_lift(r, x);
    const RingElement w = gr4_sub(r, x, a);
    RingElement half = gr4_zero(r);
    for (int i = 0; i < r.k(); ++i) half.coeffs[i] = w.coeffs[i] / 2;  // w has even coefficients
    const RingElement b = teich_lift(r, half);
    return gr4_add(r, gr4_mul(r, a, a), gr4_scalar_mul(r, 2, gr4_mul(r, b, b)));
}

int gr4_trace(const GaloisRingSpec& r, const RingElement& x) {
    check_ring_element(r, x, "gr4_trace");
    RingElement acc = x;
    RingElement y = x;
    for (int i = 1; i < r.k(); ++i) {
        y = gr4_frobenius(r, y);
        acc = gr4_add(r, acc, y);
    }
    for (int i = 1; i < r.k(); ++i) {
        if (acc.coeffs[i] != 0) throw std::logic_error("gr4_trace: result not in Z4");
    }
    return acc.coeffs[0];
}

std::vector<RingElement> teichmuller_set(const GaloisRingSpec& r) {
    const int k = r.k();
    const long count = 1L << k;
    std::vector<RingElement> out;
    out.reserve(count);
    for (long bits = 0; bits < count; ++bits) {
        RingElement x = gr4_zero(r);
        for (int i = 0; i < k; ++i) x.coeffs[i] = static_cast<int>((bits >> i) & 1);
        out.push_back(teich_lift(r, x));
    }
    return out;
}

}  // namespace mub::gf
