#pragma once

#include "hosoya/graph.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hosoya {

// Seeded generators for property sweeps. Deterministic for a given engine
// state; all sampling is uniform and self-contained.

// Random tree on n vertices (each vertex links to a uniform earlier one).
inline Graph random_tree(std::mt19937& rng, int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        int u = (int)(rng() % (unsigned)v);
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

// Connected graph: a random tree plus up to extra_edges additional edges.
inline Graph random_connected_graph(std::mt19937& rng, int n, int extra_edges) {
    Graph tree = random_tree(rng, n);
    std::set<Edge> edges(tree.edges().begin(), tree.edges().end());
    long possible = (long)n * (n - 1) / 2;
    for (int i = 0; i < extra_edges && (long)edges.size() < possible; ++i) {
        int u = (int)(rng() % (unsigned)n);
        int v = (int)(rng() % (unsigned)n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        edges.emplace(u, v);
    }
    return Graph::from_edge_list(n, {edges.begin(), edges.end()});
}

// Arbitrary (possibly disconnected) graph with at most max_edges edges.
inline Graph random_graph(std::mt19937& rng, int n, int max_edges) {
    std::set<Edge> edges;
    long possible = (long)n * (n - 1) / 2;
    int want = possible == 0 ? 0 : (int)(rng() % (unsigned)(max_edges + 1));
    for (int i = 0; i < 4 * want && (long)edges.size() < std::min((long)want, possible); ++i) {
        int u = (int)(rng() % (unsigned)n);
        int v = (int)(rng() % (unsigned)n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        edges.emplace(u, v);
    }
    return Graph::from_edge_list(n, {edges.begin(), edges.end()});
}

// Random permutation of 0..n-1.
inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm((std::size_t)n);
    for (int i = 0; i < n; ++i) perm[(std::size_t)i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace hosoya
