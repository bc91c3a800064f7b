// rigidity.cpp
#include "mub/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mub/rng.hpp"

namespace mub {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::CompleteMub: return "CompleteMub";
        case Verdict::NotApplicable: return "NotApplicable";
        case Verdict::Contradiction: return "Contradiction";
    }
    return "?";
}

// ----------------------------- lemma_rk_check --------------------------------

LemmaRkReport lemma_rk_check(const HermitianMatrix& A, double tol) {
    LemmaRkReport r;
    const double tr = A.trace();
    r.lhs = tr * tr;
    // tr(A^2) = sum |A_jk|^2 for self-adjoint A
    double tr2 = 0.0;
    for (const Complex& z : A.raw()) tr2 += std::norm(z);
    r.rank_r = numerical_rank(A);
    r.rhs = r.rank_r * tr2;
    r.inequality_holds = r.lhs <= r.rhs + 1e-8 * std::abs(r.rhs);
    r.equality_within_tol = std::abs(r.lhs - r.rhs) <= tol * std::max(1.0, std::abs(r.rhs));
    const ProjectionMultiple pm = is_projection_multiple(A, tol);
    r.is_projection_multiple = pm.is_multiple;
    r.scalar = pm.scalar;
    return r;
}

// --------------------------- Gram-matrix report ------------------------------

namespace {

// Kt has entries |<b_j,b_k>|^2 - 1/d, assembled from the measured overlaps.
HermitianMatrix kt_matrix(const PairClassification& pc) {
    const int n = pc.n;
    const double inv_d = 1.0 / pc.d;
    HermitianMatrix kt = HermitianMatrix::zero(n);
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) kt.set(j, k, pc.overlap(j, k) - inv_d);
    }
    return kt;
}

GramReport gram_report_from(const UnitVectorSystem& sys, const PairClassification& pc) {
    const int n = sys.n();
    const int d = sys.d();
    GramReport rep;

    const HermitianMatrix k = gram(sys.vectors());
    rep.trace_K = k.trace();
    double tr2 = 0.0;
    for (const Complex& z : k.raw()) tr2 += std::norm(z);
    rep.trace_K2 = tr2;
    rep.rank_K = numerical_rank(k);

    const HermitianMatrix kt = kt_matrix(pc);
    rep.trace_Kt = kt.trace();
    double kt2 = 0.0;
    for (const Complex& z : kt.raw()) kt2 += std::norm(z);
    rep.trace_Kt2 = kt2;
    rep.rank_Kt = numerical_rank(kt);
    rep.Kt_projection_residual = max_abs_diff(herm_square(kt), kt);

    // (tr K)^2 <= rk(K) tr(K^2) with rk(K) <= d, combined with
    // tr(K^2) = n + n(n-1)/d - 2|E|/d, bounds |E| from above by n(d-1)/2.
    rep.edge_upper_bound = static_cast<long long>(n) * (d - 1) / 2;
    // The same inequality applied to Kt (rank at most d^2-1, diagonal 1-1/d,
    // orthogonal entries -1/d) bounds |E| from below.
    const long long num = static_cast<long long>(d - 1) * (d - 1) * n * (n - (d * d - 1));
    const long long den = 2LL * (d * d - 1);
    rep.edge_lower_bound = num <= 0 ? 0 : (num + den - 1) / den;
    return rep;
}

}  // namespace

GramReport check_gram_identities(const UnitVectorSystem& sys, double tol) {
    const PairClassification pc = classify_pairs(sys, tol);
    if (pc.count(PairLabel::Violation) > 0)
        throw NotApplicable("check_gram_identities: classification contains Violation pairs");
    return gram_report_from(sys, pc);
}

// --------------------------------- verify ------------------------------------

namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

struct Pipeline {
    RigidityCertificate cert;
    bool failed = false;

    void pass(const std::string& name, const std::string& detail) {
        cert.stages.push_back({name, true, detail});
    }

    void fail(const std::string& name, const std::string& detail, const std::string& tag,
              Verdict verdict) {
        cert.stages.push_back({name, false, detail});
        cert.failure_stage = tag;
        cert.verdict = verdict;
        failed = true;
    }
};

}  // namespace

RigidityCertificate verify(const UnitVectorSystem& sys, double tol) {
    if (tol <= 0.0) throw InvalidInput("verify: tolerance must be positive");
    const int d = sys.d();
    const int n = sys.n();

    Pipeline pl;
    pl.cert.d = d;
    pl.cert.n = n;
    pl.cert.tol = tol;

    // stage 1: vector count
    const int expected_n = d * (d + 1);
    if (n != expected_n) {
        pl.fail("n-check",
                "n=" + std::to_string(n) + " but d(d+1)=" + std::to_string(expected_n),
                "n-mismatch", Verdict::NotApplicable);
        return pl.cert;
    }
    pl.pass("n-check", "n=" + std::to_string(n));

    // stage 2: pair classification
    const PairClassification pc = classify_pairs(sys, tol);
    pl.cert.classification_summary = {pc.count(PairLabel::Orthogonal),
                                      pc.count(PairLabel::Unbiased),
                                      pc.count(PairLabel::Violation)};
    if (pl.cert.classification_summary.violation > 0) {
        pl.fail("classification",
                std::to_string(pl.cert.classification_summary.violation) +
                    " pair(s) neither orthogonal nor unbiased at tol",
                "classification", Verdict::NotApplicable);
        return pl.cert;
    }
    pl.pass("classification",
            "orthogonal=" + std::to_string(pl.cert.classification_summary.orthogonal) +
                " unbiased=" + std::to_string(pl.cert.classification_summary.unbiased));

    // From here on the hypothesis holds; any failure would contradict the
    // rigidity property and is reported as such.

    // stage 3: Gram identities and edge bounds
    const GramReport rep = gram_report_from(sys, pc);
    pl.cert.gram = rep;
    {
        const long long edges = pl.cert.classification_summary.orthogonal;
        // identity residual budgets follow from per-pair deviations <= tol
        const double trace_tol = 3e-9 * n;
        const double identity_tol = 1e-8 + static_cast<double>(n) * n * tol;
        const double proj_tol = 1e-8 + (2.0 * n + 1.0) * tol;
        const double expected_tr_k2 =
            n + static_cast<double>(n) * (n - 1) / d - 2.0 * static_cast<double>(edges) / d;
        std::string bad;
        if (std::abs(rep.trace_K - n) > trace_tol) {
            bad = "tr K = " + format_double(rep.trace_K) + " != n";
        } else if (std::abs(rep.trace_K2 - expected_tr_k2) > identity_tol) {
            bad = "tr K^2 = " + format_double(rep.trace_K2) + " != " +
                  format_double(expected_tr_k2);
        } else if (rep.rank_K > d) {
            bad = "rk K = " + std::to_string(rep.rank_K) + " > d";
        } else if (rep.rank_Kt > d * d - 1) {
            bad = "rk Kt = " + std::to_string(rep.rank_Kt) + " > d^2-1";
        } else if (rep.Kt_projection_residual > proj_tol) {
            bad = "||Kt^2 - Kt|| = " + format_double(rep.Kt_projection_residual);
        } else if (edges < rep.edge_lower_bound || edges > rep.edge_upper_bound) {
            bad = "edges=" + std::to_string(edges) + " outside [" +
                  std::to_string(rep.edge_lower_bound) + ", " +
                  std::to_string(rep.edge_upper_bound) + "]";
        }
        if (!bad.empty()) {
            pl.fail("gram-identities", bad, "gram-identities", Verdict::Contradiction);
            return pl.cert;
        }
        pl.pass("gram-identities",
                "rk K=" + std::to_string(rep.rank_K) + " rk Kt=" + std::to_string(rep.rank_Kt) +
                    " residual=" + format_double(rep.Kt_projection_residual));
    }

    // stage 4: graph build and exact edge count
    const OrthogonalityGraph g = build_graph(pc);
    pl.cert.edge_count = g.edge_count;
    const long long expected_edges = static_cast<long long>(d) * (d * d - 1) / 2;
    if (g.edge_count != expected_edges) {
        pl.fail("edge-count",
                "edges=" + std::to_string(g.edge_count) + " expected " +
                    std::to_string(expected_edges),
                "edge-count", Verdict::Contradiction);
        return pl.cert;
    }
    pl.pass("edge-count", "edges=" + std::to_string(g.edge_count));

    // stage 5: h = <1, A 1> and regularity
    {
        long long h = 0;
        for (std::uint8_t a : g.adjacency) h += a;
        pl.cert.sum_A_entries = h;
        const std::vector<int> deg = degree_sequence(g);
        const bool regular = std::all_of(deg.begin(), deg.end(), [&](int x) { return x == d - 1; });
        if (regular) pl.cert.regular_degree = d - 1;
        const long long expected_h = static_cast<long long>(d - 1) * d * (d + 1);
        if (h != expected_h || !regular) {
            pl.fail("regularity",
                    "h=" + std::to_string(h) + " expected " + std::to_string(expected_h) +
                        (regular ? "" : ", graph not (d-1)-regular"),
                    "regularity", Verdict::Contradiction);
            return pl.cert;
        }
        pl.pass("regularity", "h=" + std::to_string(h) + " degree=" + std::to_string(d - 1));
    }

    // stage 6: adjacency spectrum {d-1 x(d+1), -1 x(d^2-1)}
    {
        const SpectrumResult sp = adjacency_spectrum(g);
        pl.cert.spectrum = cluster_spectrum(sp);
        const double eig_tol = 1e-8;
        bool ok = pl.cert.spectrum.size() == 2;
        if (ok) {
            ok = std::abs(pl.cert.spectrum[0].first - (d - 1)) <= eig_tol &&
                 pl.cert.spectrum[0].second == d + 1 &&
                 std::abs(pl.cert.spectrum[1].first - (-1.0)) <= eig_tol &&
                 pl.cert.spectrum[1].second == d * d - 1;
        }
        // d = 1: the expected -1 cluster is empty and the spectrum is all zeros
        if (d == 1) {
            ok = pl.cert.spectrum.size() == 1 && pl.cert.spectrum[0].second == 2 &&
                 std::abs(pl.cert.spectrum[0].first) <= eig_tol;
        }
        if (!ok) {
            std::string got;
            for (const auto& [v, m] : pl.cert.spectrum)
                got += " " + format_double(v) + "x" + std::to_string(m);
            pl.fail("spectrum", "clusters:" + got, "spectrum", Verdict::Contradiction);
            return pl.cert;
        }
        std::string got;
        for (const auto& [v, m] : pl.cert.spectrum)
            got += " " + format_double(v) + "x" + std::to_string(m);
        pl.pass("spectrum", got.empty() ? "-" : got.substr(1));
    }

    // stage 7: ordered triangles
    {
        const long long t = ordered_triangle_count(g);
        pl.cert.ordered_triangles = t;
        const long long expected_t = static_cast<long long>(d * d - 1) * d * (d - 2);
        if (t != expected_t) {
            pl.fail("triangles",
                    "triangles=" + std::to_string(t) + " expected " + std::to_string(expected_t),
                    "triangles", Verdict::Contradiction);
            return pl.cert;
        }
        pl.pass("triangles", "triangles=" + std::to_string(t));
    }

    // stage 8: clique partition
    const CliquePartition parts = clique_partition(g, d);
    if (!parts.success) {
        pl.fail("partition", parts.diagnostics, "partition", Verdict::Contradiction);
        return pl.cert;
    }
    pl.cert.partition = parts.parts;
    pl.pass("partition", std::to_string(parts.parts.size()) + " parts of size " + std::to_string(d));

    // stage 9: direct re-validation from the raw vectors, bypassing the graph
    {
        const double target = 1.0 / d;
        std::string bad;
        for (const auto& part : parts.parts) {
            for (std::size_t i = 0; i < part.size() && bad.empty(); ++i) {
                for (std::size_t j = i + 1; j < part.size(); ++j) {
                    if (overlap2(sys.vector(part[i]), sys.vector(part[j])) > tol) {
                        bad = "part not orthonormal at vertices " + std::to_string(part[i]) +
                              "," + std::to_string(part[j]);
                        break;
                    }
                }
            }
        }
        for (std::size_t a = 0; a < parts.parts.size() && bad.empty(); ++a) {
            for (std::size_t b = a + 1; b < parts.parts.size() && bad.empty(); ++b) {
                for (int va : parts.parts[a]) {
                    for (int vb : parts.parts[b]) {
                        if (std::abs(overlap2(sys.vector(va), sys.vector(vb)) - target) > tol) {
                            bad = "parts " + std::to_string(a) + "," + std::to_string(b) +
                                  " not unbiased at vertices " + std::to_string(va) + "," +
                                  std::to_string(vb);
                            break;
                        }
                    }
                    if (!bad.empty()) break;
                }
            }
        }
        if (!bad.empty()) {
            pl.fail("revalidation", bad, "revalidation", Verdict::Contradiction);
            return pl.cert;
        }
        pl.pass("revalidation", "all parts orthonormal, all cross pairs unbiased");
    }

    pl.cert.verdict = Verdict::CompleteMub;
    return pl.cert;
}

// -------------------------------- mutations ----------------------------------

namespace {

CVector random_unit_vector(int d, SplitMix64& rng) {
    std::vector<Complex> v(d);
    for (int j = 0; j < d; ++j) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        v[j] = Complex(re, im);
    }
    CVector out(std::move(v));
    const double nrm = out.norm();
    for (int j = 0; j < d; ++j) out[j] /= nrm;
    return out;
}

// QR of a seeded Gaussian matrix by modified Gram-Schmidt; columns returned.
std::vector<CVector> random_unitary_columns(int d, SplitMix64& rng) {
    std::vector<CVector> cols;
    for (int c = 0; c < d; ++c) {
        std::vector<Complex> raw(d);
        for (int j = 0; j < d; ++j) raw[j] = Complex(rng.gaussian(), rng.gaussian());
        CVector col(std::move(raw));
        for (int pass = 0; pass < 2; ++pass) {
            for (const CVector& prev : cols) {
                const Complex proj = inner(prev, col);
                for (int j = 0; j < d; ++j) col[j] -= proj * prev[j];
            }
        }
        const double nrm = col.norm();
        for (int j = 0; j < d; ++j) col[j] /= nrm;
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace

UnitVectorSystem mutate_permute(const UnitVectorSystem& sys, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int n = sys.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    std::vector<CVector> vectors;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        vectors.push_back(sys.vector(perm[i]));
        if (!sys.labels().empty()) labels.push_back(sys.labels()[perm[i]]);
    }
    return UnitVectorSystem(sys.d(), std::move(vectors), std::move(labels));
}

UnitVectorSystem mutate_unitary(const UnitVectorSystem& sys, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int d = sys.d();
    const std::vector<CVector> u = random_unitary_columns(d, rng);
    std::vector<CVector> vectors;
    for (const CVector& v : sys.vectors()) {
        std::vector<Complex> w(d, Complex(0.0, 0.0));
        for (int c = 0; c < d; ++c) {
            for (int r = 0; r < d; ++r) w[r] += u[c][r] * v[c];
        }
        vectors.push_back(CVector(std::move(w)));
    }
    return UnitVectorSystem(d, std::move(vectors), sys.labels());
}

UnitVectorSystem mutate_rephase(const UnitVectorSystem& sys, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<CVector> vectors;
    for (const CVector& v : sys.vectors()) {
        const Complex phase = std::polar(1.0, 6.283185307179586 * rng.uniform());
        std::vector<Complex> w = v.entries();
        for (Complex& z : w) z *= phase;
        vectors.push_back(CVector(std::move(w)));
    }
    return UnitVectorSystem(sys.d(), std::move(vectors), sys.labels());
}

UnitVectorSystem mutate_drop(const UnitVectorSystem& sys, int index) {
    if (index < 0 || index >= sys.n()) throw InvalidInput("mutate_drop: index out of range");
    std::vector<CVector> vectors = sys.vectors();
    vectors.erase(vectors.begin() + index);
    std::vector<std::string> labels = sys.labels();
    if (!labels.empty()) labels.erase(labels.begin() + index);
    return UnitVectorSystem(sys.d(), std::move(vectors), std::move(labels));
}

UnitVectorSystem mutate_replace(const UnitVectorSystem& sys, int index, std::uint64_t seed) {
    if (index < 0 || index >= sys.n()) throw InvalidInput("mutate_replace: index out of range");
    SplitMix64 rng(seed);
    std::vector<CVector> vectors = sys.vectors();
    vectors[index] = random_unit_vector(sys.d(), rng);
    return UnitVectorSystem(sys.d(), std::move(vectors), sys.labels());
}

}  // namespace mub
