// rigidity.hpp — the end-to-end verifier that turns a unit-vector system into
// a checkable certificate: if n = d(d+1) and every pair is orthogonal or
// unbiased, the pipeline recovers the d+1 mutually unbiased orthonormal bases
// and re-validates them directly. Also standalone checkers for the trace-rank
// inequality and the Gram-matrix identities, plus seeded mutation utilities
// for adversarial testing.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mub/cxla.hpp"
#include "mub/graph.hpp"
#include "mub/system.hpp"

namespace mub {

// Diagnostics for the Gram matrix K and the traceless-projector Gram matrix
// Kt (entries |<b_j,b_k>|^2 - 1/d).
struct GramReport {
    double trace_K = 0.0;
    double trace_K2 = 0.0;  // direct summation of |K_jk|^2
    int rank_K = 0;
    double trace_Kt = 0.0;
    double trace_Kt2 = 0.0;
    int rank_Kt = 0;
    double Kt_projection_residual = 0.0;  // ||Kt^2 - Kt||_max
    long long edge_upper_bound = 0;       // from (tr K)^2 <= rk(K) tr(K^2), rk(K) <= d
    long long edge_lower_bound = 0;       // from the same bound applied to Kt, rk <= d^2-1
};

// Report for the inequality (tr A)^2 <= r tr(A^2) and its equality case.
struct LemmaRkReport {
    double lhs = 0.0;  // (tr A)^2
    double rhs = 0.0;  // r * tr(A^2)
    int rank_r = 0;
    bool inequality_holds = false;
    bool equality_within_tol = false;
    bool is_projection_multiple = false;
    double scalar = 0.0;
};

enum class Verdict { CompleteMub, NotApplicable, Contradiction };

std::string to_string(Verdict v);

struct StageRecord {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ClassificationSummary {
    long long orthogonal = 0;  // unordered pair counts
    long long unbiased = 0;
    long long violation = 0;
};

// End-to-end verification record. CompleteMub means every stage passed and the
// recovered partition was re-validated directly from the vectors.
// NotApplicable means the hypothesis failed (wrong count or a Violation pair).
// Contradiction means the hypothesis held but a later stage failed; it should
// never occur and carries full diagnostics when it does.
struct RigidityCertificate {
    int d = 0;
    int n = 0;
    double tol = 0.0;
    ClassificationSummary classification_summary;
    std::optional<GramReport> gram;
    long long edge_count = -1;
    std::optional<int> regular_degree;
    long long sum_A_entries = -1;  // h = <1, A 1>; equals 2 * edge_count
    std::vector<std::pair<double, int>> spectrum;  // (eigenvalue, multiplicity)
    long long ordered_triangles = -1;
    std::optional<std::vector<std::vector<int>>> partition;
    Verdict verdict = Verdict::NotApplicable;
    std::optional<std::string> failure_stage;
    std::vector<StageRecord> stages;
};

/// Inequality (tr A)^2 <= r tr(A^2) with the equality case detected two ways:
/// numerically (|lhs - rhs| against tol) and structurally (spectrum contained
/// in {0, s}). A rank-0 matrix reports equality with scalar 0.
LemmaRkReport lemma_rk_check(const HermitianMatrix& A, double tol = 1e-8);

/// Trace/rank/projection diagnostics for K and Kt. Throws NotApplicable if any
/// pair violates the orthogonal-or-unbiased dichotomy at tol.
GramReport check_gram_identities(const UnitVectorSystem& sys, double tol = 1e-9);

/// The full pipeline; see RigidityCertificate. Stages:
///   1 vector count n = d(d+1)          6 spectrum {d-1 x(d+1), -1 x(d^2-1)}
///   2 pair classification              7 ordered triangles (d^2-1)d(d-2)
///   3 Gram identities and edge bounds  8 partition into d+1 cliques of size d
///   4 edge count d(d^2-1)/2            9 direct orthonormality/unbiasedness
///   5 h = <1,A1> and (d-1)-regularity    re-validation of the partition
RigidityCertificate verify(const UnitVectorSystem& sys, double tol = 1e-9);

// Seeded mutations (splitmix64 streams; a fixed seed reproduces the output).
UnitVectorSystem mutate_permute(const UnitVectorSystem& sys, std::uint64_t seed);
UnitVectorSystem mutate_unitary(const UnitVectorSystem& sys, std::uint64_t seed);
UnitVectorSystem mutate_rephase(const UnitVectorSystem& sys, std::uint64_t seed);
UnitVectorSystem mutate_drop(const UnitVectorSystem& sys, int index);
UnitVectorSystem mutate_replace(const UnitVectorSystem& sys, int index, std::uint64_t seed);

}  // namespace mub
