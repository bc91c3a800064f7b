#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "mub/constructions.hpp"
#include "mub/io.hpp"
#include "mub/rigidity.hpp"
#include "support/gen.hpp"

using namespace mub;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("mvs-1 round-trips vector entries bit-exactly") {
    SplitMix64 rng(51);
    const UnitVectorSystem sys(5, testgen::random_unit_vectors(5, 9, rng),
                               {"a", "b", "c", "d", "e", "f", "g", "h", "i"});
    const UnitVectorSystem back = io::system_from_json(io::system_to_json(sys));
    CHECK(back.d() == sys.d());
    CHECK(back.n() == sys.n());
    CHECK(back.labels() == sys.labels());
    for (int i = 0; i < sys.n(); ++i) {
        for (int x = 0; x < sys.d(); ++x) {
            CHECK(back.vector(i)[x].real() == sys.vector(i)[x].real());
            CHECK(back.vector(i)[x].imag() == sys.vector(i)[x].imag());
        }
    }
}

TEST_CASE("mvs-1 file round-trip through disk") {
    const std::string path = temp_path("mub_io_test_system.json");
    const UnitVectorSystem sys = flatten(complete_mub(3));
    io::write_system(sys, path);
    const UnitVectorSystem back = io::read_system(path);
    CHECK(back.n() == 12);
    CHECK(back.vectors() == sys.vectors());
    CHECK(back.labels() == sys.labels());
    std::remove(path.c_str());
}

TEST_CASE("mvs-1 serialization carries 17 significant digits") {
    const double third = 1.0 / 3.0;
    const UnitVectorSystem sys(
        2, {CVector({Complex(std::sqrt(1.0 - third * third), 0.0), Complex(third, 0.0)})});
    const std::string text = io::system_to_json(sys);
    CHECK(text.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("mvs-1 parse failures") {
    CHECK_THROWS_AS(io::system_from_json("{ not json"), io::ParseError);
    CHECK_THROWS_AS(io::system_from_json("[1,2,3]"), io::ParseError);
    CHECK_THROWS_AS(io::system_from_json(R"({"format_version":"mvs-2","d":1,"n":1,"vectors":[[[1,0]]]})"),
                    io::ParseError);
    CHECK_THROWS_AS(io::system_from_json(R"({"format_version":"mvs-1","d":1,"n":2,"vectors":[[[1,0]]]})"),
                    io::ParseError);
    CHECK_THROWS_AS(io::system_from_json(R"({"format_version":"mvs-1","d":2,"n":1,"vectors":[[[1,0]]]})"),
                    io::ParseError);
    // well-formed file, but the vector is not unit length
    CHECK_THROWS_AS(io::system_from_json(R"({"format_version":"mvs-1","d":1,"n":1,"vectors":[[[2,0]]]})"),
                    InvalidInput);
    CHECK_THROWS_AS(io::read_system(temp_path("mub_io_missing_file.json")), io::ParseError);
}

TEST_CASE("cert-1 round-trips losslessly") {
    const RigidityCertificate cert = verify(flatten(complete_mub(3)));
    const std::string text = io::certificate_to_json(cert);
    const RigidityCertificate back = io::certificate_from_json(text);

    CHECK(back.d == cert.d);
    CHECK(back.n == cert.n);
    CHECK(back.tol == cert.tol);
    CHECK(back.verdict == cert.verdict);
    CHECK(back.failure_stage == cert.failure_stage);
    CHECK(back.classification_summary.orthogonal == cert.classification_summary.orthogonal);
    CHECK(back.classification_summary.unbiased == cert.classification_summary.unbiased);
    CHECK(back.classification_summary.violation == cert.classification_summary.violation);
    REQUIRE(back.gram.has_value());
    CHECK(back.gram->trace_K == cert.gram->trace_K);
    CHECK(back.gram->trace_K2 == cert.gram->trace_K2);
    CHECK(back.gram->rank_K == cert.gram->rank_K);
    CHECK(back.gram->trace_Kt == cert.gram->trace_Kt);
    CHECK(back.gram->trace_Kt2 == cert.gram->trace_Kt2);
    CHECK(back.gram->rank_Kt == cert.gram->rank_Kt);
    CHECK(back.gram->Kt_projection_residual == cert.gram->Kt_projection_residual);
    CHECK(back.gram->edge_upper_bound == cert.gram->edge_upper_bound);
    CHECK(back.gram->edge_lower_bound == cert.gram->edge_lower_bound);
    CHECK(back.edge_count == cert.edge_count);
    CHECK(back.regular_degree == cert.regular_degree);
    CHECK(back.sum_A_entries == cert.sum_A_entries);
    CHECK(back.spectrum == cert.spectrum);
    CHECK(back.ordered_triangles == cert.ordered_triangles);
    CHECK(back.partition == cert.partition);
    REQUIRE(back.stages.size() == cert.stages.size());
    for (std::size_t i = 0; i < back.stages.size(); ++i) {
        CHECK(back.stages[i].name == cert.stages[i].name);
        CHECK(back.stages[i].passed == cert.stages[i].passed);
        CHECK(back.stages[i].detail == cert.stages[i].detail);
    }

    // serialize(parse(text)) reproduces the exact bytes
    CHECK(io::certificate_to_json(back) == text);
}

TEST_CASE("cert-1 round-trips a NotApplicable certificate") {
    const RigidityCertificate cert = verify(mutate_drop(flatten(complete_mub(3)), 0));
    const std::string text = io::certificate_to_json(cert);
    const RigidityCertificate back = io::certificate_from_json(text);
    CHECK(back.verdict == Verdict::NotApplicable);
    REQUIRE(back.failure_stage.has_value());
    CHECK(*back.failure_stage == "n-mismatch");
    CHECK_FALSE(back.gram.has_value());
    CHECK_FALSE(back.partition.has_value());
    CHECK(io::certificate_to_json(back) == text);
}

TEST_CASE("cert-1 parse failures") {
    CHECK_THROWS_AS(io::certificate_from_json("{}"), io::ParseError);
    CHECK_THROWS_AS(io::certificate_from_json("[oops"), io::ParseError);
}
