// mubcert — generate unit-vector systems, apply seeded perturbations, and
// verify the complete-MUB rigidity certificate.
//
// Exit codes: 0 CompleteMub (or successful generate/perturb), 1 NotApplicable,
// 3 Contradiction, 2 I/O, parse, or usage errors.
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mub/constructions.hpp"
#include "mub/io.hpp"
#include "mub/rigidity.hpp"

namespace {

int run_generate(int dim, const std::string& kind, const std::string& out) {
    mub::UnitVectorSystem sys = [&] {
        if (kind == "mub") return mub::flatten(mub::complete_mub(dim));
        if (kind == "sic-embed") {
            const int m = dim - 1;
            return mub::sic_embed(mub::weyl_heisenberg_orbit(mub::sic_fiducial(m)));
        }
        throw mub::Unsupported("unknown kind: " + kind);
    }();
    mub::io::write_system(sys, out);
    return 0;
}

int run_verify(const std::string& input, double tol, const std::string& report) {
    const mub::UnitVectorSystem sys = mub::io::read_system(input);
    const mub::RigidityCertificate cert = mub::verify(sys, tol);

    std::cout << to_string(cert.verdict) << " d=" << cert.d << " n=" << cert.n;
    if (cert.edge_count >= 0) std::cout << " edges=" << cert.edge_count;
    if (cert.ordered_triangles >= 0) std::cout << " triangles=" << cert.ordered_triangles;
    if (cert.failure_stage) std::cout << " stage=" << *cert.failure_stage;
    std::cout << "\n";
    for (const mub::StageRecord& s : cert.stages) {
        std::cout << "  " << (s.passed ? "[ ok ] " : "[fail] ") << s.name << ": " << s.detail
                  << "\n";
    }
    if (!report.empty()) mub::io::write_certificate(cert, report);

    switch (cert.verdict) {
        case mub::Verdict::CompleteMub: return 0;
        case mub::Verdict::NotApplicable: return 1;
        case mub::Verdict::Contradiction: return 3;
    }
    return 2;
}

int run_perturb(const std::string& input, const std::string& op, std::uint64_t seed, int index,
                bool have_index, const std::string& out) {
    const mub::UnitVectorSystem sys = mub::io::read_system(input);
    mub::UnitVectorSystem mutated = [&] {
        if (op == "permute") return mub::mutate_permute(sys, seed);
        if (op == "unitary") return mub::mutate_unitary(sys, seed);
        if (op == "rephase") return mub::mutate_rephase(sys, seed);
        if (op == "drop" || op == "replace") {
            if (!have_index) throw mub::InvalidInput("operation requires --index");
            if (op == "drop") return mub::mutate_drop(sys, index);
            return mub::mutate_replace(sys, index, seed);
        }
        throw mub::InvalidInput("unknown op: " + op);
    }();
    mub::io::write_system(mutated, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complete-MUB system generator and rigidity verifier"};
    app.require_subcommand(1);

    int dim = 0;
    std::string kind = "mub";
    std::string out_path;
    CLI::App* generate = app.add_subcommand("generate", "write a vector system file");
    generate->add_option("--dim", dim, "ambient dimension")->required();
    generate->add_option("--kind", kind, "mub | sic-embed")
        ->check(CLI::IsMember({"mub", "sic-embed"}));
    generate->add_option("--out", out_path, "output path")->required();

    std::string verify_input;
    double tol = 1e-9;
    std::string report_path;
    CLI::App* verify = app.add_subcommand("verify", "verify a vector system file");
    verify->add_option("input", verify_input, "mvs-1 file")->required();
    verify->add_option("--tol", tol, "classification tolerance on |<.,.>|^2");
    verify->add_option("--report", report_path, "write a cert-1 report here");

    std::string perturb_input;
    std::string op;
    std::uint64_t seed = 0;
    int index = -1;
    std::string perturb_out;
    CLI::App* perturb = app.add_subcommand("perturb", "apply a seeded mutation");
    perturb->add_option("input", perturb_input, "mvs-1 file")->required();
    perturb->add_option("--op", op, "permute | unitary | rephase | drop | replace")->required();
    perturb->add_option("--seed", seed, "64-bit seed");
    CLI::Option* index_opt = perturb->add_option("--index", index, "vector index for drop/replace");
    perturb->add_option("--out", perturb_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (generate->parsed()) return run_generate(dim, kind, out_path);
        if (verify->parsed()) return run_verify(verify_input, tol, report_path);
        if (perturb->parsed())
            return run_perturb(perturb_input, op, seed, index, !index_opt->empty(), perturb_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
