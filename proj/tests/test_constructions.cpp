#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "mub/constructions.hpp"
#include "mub/rng.hpp"
#include "support/gen.hpp"

using namespace mub;

namespace {

// exhaustive pairwise oracle: every pair orthogonal or unbiased at 1e-12, with
// the expected count of orthogonal pairs
void check_flat_mub(const UnitVectorSystem& sys, int d) {
    REQUIRE(sys.n() == d * (d + 1));
    long long orthogonal = 0;
    for (int j = 0; j < sys.n(); ++j) {
        for (int k = j + 1; k < sys.n(); ++k) {
            const double ov = overlap2(sys.vector(j), sys.vector(k));
            if (ov <= 1e-12) {
                ++orthogonal;
            } else {
                CHECK(std::abs(ov - 1.0 / d) <= 1e-12);
            }
        }
    }
    CHECK(orthogonal == static_cast<long long>(d) * (d * d - 1) / 2);
}

}  // namespace

TEST_CASE("standard basis") {
    const std::vector<CVector> e1 = standard_basis(1);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0][0] == Complex(1.0, 0.0));

    const std::vector<CVector> e3 = standard_basis(3);
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            CHECK(inner(e3[j], e3[k]) == Complex(j == k ? 1.0 : 0.0, 0.0));
        }
    }
    const HermitianMatrix g = gram(e3);
    CHECK(max_abs_diff(g, HermitianMatrix::identity(3)) == 0.0);
}

TEST_CASE("complete MUB in dimension 2") {
    const MubSystem m = complete_mub(2);
    REQUIRE(m.bases().size() == 3);
    int cross = 0;
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = a + 1; b < 3; ++b) {
            for (const CVector& e : m.bases()[a]) {
                for (const CVector& f : m.bases()[b]) {
                    CHECK(overlap2(e, f) == doctest::Approx(0.5).epsilon(1e-12));
                    ++cross;
                }
            }
        }
    }
    CHECK(cross == 12);
}

TEST_CASE("complete MUB systems pass the exhaustive pair oracle") {
    check_flat_mub(flatten(complete_mub(3)), 3);   // 66 pairs
    check_flat_mub(flatten(complete_mub(8)), 8);   // 2556 pairs
    for (int d : {4, 5, 7, 9, 11, 13, 16}) check_flat_mub(flatten(complete_mub(d)), d);
}

TEST_CASE("complete MUB systems for the large supported dimensions" * doctest::timeout(120)) {
    for (int d : {25, 27}) check_flat_mub(flatten(complete_mub(d)), d);
}

TEST_CASE("unsupported dimensions are rejected") {
    CHECK_THROWS_AS(complete_mub(6), Unsupported);
    CHECK_THROWS_AS(complete_mub(12), Unsupported);
    CHECK_THROWS_AS(complete_mub(1), Unsupported);
}

TEST_CASE("each constructed basis is orthonormal and bases are unbiased") {
    for (int d : {3, 4, 9}) {
        const MubSystem m = complete_mub(d);
        for (const auto& basis : m.bases()) {
            const HermitianMatrix g = gram(basis);
            CHECK(max_abs_diff(g, HermitianMatrix::identity(d)) <= 1e-9);
        }
    }
}

TEST_CASE("Weyl-Heisenberg orbit of (1,0) in dimension 2") {
    const UnitVectorSystem orbit = weyl_heisenberg_orbit(CVector({1.0, 0.0}));
    REQUIRE(orbit.n() == 4);
    // (a,b) lex order; Z fixes (1,0), X swaps coordinates
    CHECK(orbit.vector(0) == CVector({1.0, 0.0}));
    CHECK(orbit.vector(1) == CVector({1.0, 0.0}));
    CHECK(orbit.vector(2) == CVector({0.0, 1.0}));
    CHECK(orbit.vector(3) == CVector({0.0, 1.0}));
}

TEST_CASE("orbit vectors stay unit for random fiducials") {
    SplitMix64 rng(21);
    for (int m : {2, 3, 5, 8}) {
        const UnitVectorSystem orbit = weyl_heisenberg_orbit(testgen::random_unit_vector(m, rng));
        REQUIRE(orbit.n() == m * m);
        for (const CVector& v : orbit.vectors()) CHECK(std::abs(v.norm() - 1.0) <= 1e-14);
    }
}

TEST_CASE("orbit overlap multiset is invariant under a global fiducial phase") {
    SplitMix64 rng(22);
    const CVector f = testgen::random_unit_vector(3, rng);
    std::vector<Complex> g_entries = f.entries();
    const Complex phase = std::polar(1.0, 1.234);
    for (Complex& z : g_entries) z *= phase;

    auto overlaps = [](const UnitVectorSystem& s) {
        std::vector<double> out;
        for (int j = 0; j < s.n(); ++j)
            for (int k = j + 1; k < s.n(); ++k) out.push_back(overlap2(s.vector(j), s.vector(k)));
        std::sort(out.begin(), out.end());
        return out;
    };
    const std::vector<double> a = overlaps(weyl_heisenberg_orbit(f));
    const std::vector<double> b = overlaps(weyl_heisenberg_orbit(CVector(std::move(g_entries))));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
}

TEST_CASE("orbit rejects bad fiducials") {
    CHECK_THROWS_AS(weyl_heisenberg_orbit(CVector({1.0})), InvalidInput);
    CHECK_THROWS_AS(weyl_heisenberg_orbit(CVector({1.0, 1.0})), InvalidInput);
}

TEST_CASE("SIC fiducials and their orbits") {
    SUBCASE("m = 2") {
        const CVector f = sic_fiducial(2);
        CHECK(std::abs(f.norm() - 1.0) <= 1e-15);
        const UnitVectorSystem orbit = weyl_heisenberg_orbit(f);
        for (int j = 0; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) {
                CHECK(overlap2(orbit.vector(j), orbit.vector(k)) ==
                      doctest::Approx(1.0 / 3).epsilon(1e-12));
            }
        }
    }
    SUBCASE("m = 3") {
        const CVector f = sic_fiducial(3);
        CHECK(std::abs(f.norm() - 1.0) <= 1e-15);
        const UnitVectorSystem orbit = weyl_heisenberg_orbit(f);
        REQUIRE(orbit.n() == 9);
        for (int j = 0; j < 9; ++j) {
            for (int k = j + 1; k < 9; ++k) {
                CHECK(overlap2(orbit.vector(j), orbit.vector(k)) ==
                      doctest::Approx(0.25).epsilon(1e-12));
            }
        }
    }
    SUBCASE("unsupported m") {
        CHECK_THROWS_AS(sic_fiducial(4), Unsupported);
    }
}

TEST_CASE("sic_embed appends an exact zero and preserves inner products") {
    for (int m : {2, 3}) {
        const UnitVectorSystem sic = weyl_heisenberg_orbit(sic_fiducial(m));
        const UnitVectorSystem emb = sic_embed(sic);
        REQUIRE(emb.d() == m + 1);
        REQUIRE(emb.n() == m * m);
        for (int j = 0; j < emb.n(); ++j) {
            CHECK(emb.vector(j)[m] == Complex(0.0, 0.0));
            for (int k = j + 1; k < emb.n(); ++k) {
                // appending a zero coordinate changes nothing, bit for bit
                CHECK(inner(emb.vector(j), emb.vector(k)) == inner(sic.vector(j), sic.vector(k)));
                CHECK(overlap2(emb.vector(j), emb.vector(k)) ==
                      doctest::Approx(1.0 / (m + 1)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("sic_embed rejects inputs that are not SICs") {
    SplitMix64 rng(23);
    const UnitVectorSystem junk(2, testgen::random_unit_vectors(2, 4, rng));
    CHECK_THROWS_AS(sic_embed(junk), InvalidInput);

    const UnitVectorSystem wrong_count(2, testgen::random_unit_vectors(2, 3, rng));
    CHECK_THROWS_AS(sic_embed(wrong_count), InvalidInput);
}

TEST_CASE("flatten produces labeled vectors") {
    const UnitVectorSystem sys = flatten(complete_mub(3));
    CHECK(sys.n() == 12);
    REQUIRE(sys.labels().size() == 12);
    CHECK(sys.labels()[0] == "B0[0]");
    CHECK(sys.labels()[11] == "B3[2]");
}

TEST_CASE("MubSystem rejects broken input") {
    const MubSystem good = complete_mub(2);
    auto bases = good.bases();
    bases[1][1] = bases[1][0];  // duplicate vector ruins orthogonality
    CHECK_THROWS_AS(MubSystem(2, std::move(bases)), InvalidInput);
}
