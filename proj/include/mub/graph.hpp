// graph.hpp — the orthogonality graph of a unit-vector system and the
// combinatorial quantities the verifier consumes: edges, degrees, spectrum,
// ordered triangles, clique decomposition.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mub/cxla.hpp"
#include "mub/system.hpp"

namespace mub {

enum class PairLabel : std::uint8_t { Self, Orthogonal, Unbiased, Violation };

// Symmetric n x n classification of every pair: Orthogonal when
// |<b_j,b_k>|^2 <= tol, Unbiased when ||<b_j,b_k>|^2 - 1/d| <= tol, otherwise
// Violation. Overlaps are stored exactly as computed.
struct PairClassification {
    int n = 0;
    int d = 0;
    double tol = 0.0;
    std::vector<PairLabel> labels;  // n*n row-major, diagonal Self
    std::vector<double> overlaps;   // |<b_j,b_k>|^2

    PairLabel label(int j, int k) const { return labels[static_cast<std::size_t>(j) * n + k]; }
    double overlap(int j, int k) const { return overlaps[static_cast<std::size_t>(j) * n + k]; }
    /// Unordered off-diagonal pairs carrying the given label.
    long long count(PairLabel l) const;
};

PairClassification classify_pairs(const UnitVectorSystem& sys, double tol = 1e-9);

// Simple graph on the vector indices; vertices are joined iff the pair is
// orthogonal.
struct OrthogonalityGraph {
    int n = 0;
    std::vector<std::uint8_t> adjacency;  // n*n, 0/1, symmetric, zero diagonal
    long long edge_count = 0;

    bool adjacent(int j, int k) const { return adjacency[static_cast<std::size_t>(j) * n + k] != 0; }
};

/// Builds the graph from a classification; throws NotApplicable if any pair is
/// labeled Violation.
OrthogonalityGraph build_graph(const PairClassification& pc);

/// Wraps an explicit 0/1 adjacency matrix (validated: symmetric, zero
/// diagonal).
OrthogonalityGraph graph_from_adjacency(int n, std::vector<std::uint8_t> adjacency);

std::vector<int> degree_sequence(const OrthogonalityGraph& g);
bool is_regular(const OrthogonalityGraph& g, int r);

/// Exact count of ordered triples (u,v,w) of pairwise adjacent vertices,
/// computed by integer enumeration over adjacency lists; equals tr(A^3).
long long ordered_triangle_count(const OrthogonalityGraph& g);

/// Real spectrum of the adjacency matrix.
SpectrumResult adjacency_spectrum(const OrthogonalityGraph& g);

/// Eigenvalues grouped into clusters separated by gaps larger than 0.5,
/// reported as (cluster mean, multiplicity), descending.
std::vector<std::pair<double, int>> cluster_spectrum(const SpectrumResult& sp);

struct CliquePartition {
    bool success = false;
    std::vector<std::vector<int>> parts;  // ascending smallest-vertex order
    std::string diagnostics;              // populated when success == false
};

/// Connected components of g; succeeds iff there are exactly d+1 of them, each
/// with d vertices and internally complete. Requires n = d(d+1).
CliquePartition clique_partition(const OrthogonalityGraph& g, int d);

}  // namespace mub
