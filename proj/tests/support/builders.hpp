#pragma once

#include "hosoya/graph.hpp"

namespace hosoya::testsupport {

// Hand-rolled reference constructions, independent of the families module.

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edge_list(n, edges);
}

inline Graph star_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edge_list(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return Graph::from_edge_list(a.vertex_count() + b.vertex_count(), edges);
}

} // namespace hosoya::testsupport
