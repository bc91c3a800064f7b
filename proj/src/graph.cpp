// graph.cpp
#include "mub/graph.hpp"

#include <algorithm>
#include <cmath>

namespace mub {

long long PairClassification::count(PairLabel l) const {
    long long c = 0;
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            if (label(j, k) == l) ++c;
        }
    }
    return c;
}

PairClassification classify_pairs(const UnitVectorSystem& sys, double tol) {
    if (tol <= 0.0) throw InvalidInput("classify_pairs: tolerance must be positive");
    const int n = sys.n();
    PairClassification pc;
    pc.n = n;
    pc.d = sys.d();
    pc.tol = tol;
    pc.labels.assign(static_cast<std::size_t>(n) * n, PairLabel::Self);
    pc.overlaps.assign(static_cast<std::size_t>(n) * n, 0.0);
    const double unbiased = 1.0 / sys.d();
    for (int j = 0; j < n; ++j) {
        pc.overlaps[static_cast<std::size_t>(j) * n + j] = overlap2(sys.vector(j), sys.vector(j));
        for (int k = j + 1; k < n; ++k) {
            const double ov = overlap2(sys.vector(j), sys.vector(k));
            PairLabel l = PairLabel::Violation;
            if (ov <= tol) {
                l = PairLabel::Orthogonal;
            } else if (std::abs(ov - unbiased) <= tol) {
                l = PairLabel::Unbiased;
            }
            pc.overlaps[static_cast<std::size_t>(j) * n + k] = ov;
            pc.overlaps[static_cast<std::size_t>(k) * n + j] = ov;
            pc.labels[static_cast<std::size_t>(j) * n + k] = l;
            pc.labels[static_cast<std::size_t>(k) * n + j] = l;
        }
    }
    return pc;
}

OrthogonalityGraph build_graph(const PairClassification& pc) {
    if (pc.count(PairLabel::Violation) > 0)
        throw NotApplicable("build_graph: classification contains Violation pairs");
    const int n = pc.n;
    OrthogonalityGraph g;
    g.n = n;
    g.adjacency.assign(static_cast<std::size_t>(n) * n, 0);
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            if (pc.label(j, k) == PairLabel::Orthogonal) {
                g.adjacency[static_cast<std::size_t>(j) * n + k] = 1;
                g.adjacency[static_cast<std::size_t>(k) * n + j] = 1;
                ++g.edge_count;
            }
        }
    }
    return g;
}

OrthogonalityGraph graph_from_adjacency(int n, std::vector<std::uint8_t> adjacency) {
    if (n < 1) throw InvalidInput("graph_from_adjacency: size must be positive");
    if (adjacency.size() != static_cast<std::size_t>(n) * n)
        throw InvalidInput("graph_from_adjacency: adjacency size mismatch");
    OrthogonalityGraph g;
    g.n = n;
    g.adjacency = std::move(adjacency);
    for (int j = 0; j < n; ++j) {
        if (g.adjacency[static_cast<std::size_t>(j) * n + j] != 0)
            throw InvalidInput("graph_from_adjacency: nonzero diagonal");
        for (int k = j + 1; k < n; ++k) {
            const std::uint8_t a = g.adjacency[static_cast<std::size_t>(j) * n + k];
            const std::uint8_t b = g.adjacency[static_cast<std::size_t>(k) * n + j];
            if (a > 1 || b > 1) throw InvalidInput("graph_from_adjacency: entries must be 0/1");
            if (a != b) throw InvalidInput("graph_from_adjacency: adjacency not symmetric");
            if (a) ++g.edge_count;
        }
    }
    return g;
}

std::vector<int> degree_sequence(const OrthogonalityGraph& g) {
    std::vector<int> deg(g.n, 0);
    for (int j = 0; j < g.n; ++j) {
        for (int k = 0; k < g.n; ++k) {
            if (g.adjacent(j, k)) ++deg[j];
        }
    }
    return deg;
}

bool is_regular(const OrthogonalityGraph& g, int r) {
    const std::vector<int> deg = degree_sequence(g);
    return std::all_of(deg.begin(), deg.end(), [r](int d) { return d == r; });
}

long long ordered_triangle_count(const OrthogonalityGraph& g) {
    std::vector<std::vector<int>> nbr(g.n);
    for (int v = 0; v < g.n; ++v) {
        for (int u = 0; u < g.n; ++u) {
            if (g.adjacent(v, u)) nbr[v].push_back(u);
        }
    }
    long long t = 0;
    for (int v = 0; v < g.n; ++v) {
        for (int u : nbr[v]) {
            for (int w : nbr[v]) {
                if (u != w && g.adjacent(u, w)) ++t;
            }
        }
    }
    return t;
}

SpectrumResult adjacency_spectrum(const OrthogonalityGraph& g) {
    HermitianMatrix a = HermitianMatrix::zero(g.n);
    for (int j = 0; j < g.n; ++j) {
        for (int k = j + 1; k < g.n; ++k) {
            if (g.adjacent(j, k)) a.set(j, k, 1.0);
        }
    }
    return hermitian_eigenvalues(a);
}

std::vector<std::pair<double, int>> cluster_spectrum(const SpectrumResult& sp) {
    std::vector<std::pair<double, int>> clusters;
    double sum = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i) {
        if (count > 0 && sp.eigenvalues[i - 1] - sp.eigenvalues[i] > 0.5) {
            clusters.emplace_back(sum / count, count);
            sum = 0.0;
            count = 0;
        }
        sum += sp.eigenvalues[i];
        ++count;
    }
    if (count > 0) clusters.emplace_back(sum / count, count);
    return clusters;
}

CliquePartition clique_partition(const OrthogonalityGraph& g, int d) {
    if (d < 1) throw InvalidInput("clique_partition: d must be positive");
    if (g.n != d * (d + 1)) throw InvalidInput("clique_partition: n must equal d(d+1)");

    // connected components by scan order, so parts come out in ascending
    // smallest-vertex order
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> parts;
    for (int start = 0; start < g.n; ++start) {
        if (comp[start] >= 0) continue;
        const int id = static_cast<int>(parts.size());
        std::vector<int> stack{start};
        std::vector<int> members;
        comp[start] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u = 0; u < g.n; ++u) {
                if (g.adjacent(v, u) && comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(members.begin(), members.end());
        parts.push_back(std::move(members));
    }

    CliquePartition result;
    result.parts = std::move(parts);
    if (result.parts.size() != static_cast<std::size_t>(d) + 1) {
        result.diagnostics = "expected " + std::to_string(d + 1) + " components, found " +
                             std::to_string(result.parts.size());
        return result;
    }
    for (const auto& part : result.parts) {
        if (part.size() != static_cast<std::size_t>(d)) {
            result.diagnostics = "component of size " + std::to_string(part.size()) +
                                 " (expected " + std::to_string(d) + ")";
            return result;
        }
        for (std::size_t i = 0; i < part.size(); ++i) {
            for (std::size_t j = i + 1; j < part.size(); ++j) {
                if (!g.adjacent(part[i], part[j])) {
                    result.diagnostics = "component containing vertex " + std::to_string(part[0]) +
                                         " is not complete";
                    return result;
                }
            }
        }
    }
    result.success = true;
    return result;
}

}  // namespace mub
