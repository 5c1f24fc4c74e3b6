#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hosoya {

using Edge = std::pair<int, int>; // always stored with first < second

// Decomposition of a unicyclic graph into its unique cycle and the trees
// hanging off the cycle vertices. parent[v] points one step toward the cycle
// for non-cycle vertices and is -1 on the cycle itself.
struct CycleDecomposition {
    std::vector<int> cycle;  // cyclic order, starts at the smallest cycle vertex
    std::vector<int> parent; // size n
    std::vector<std::vector<int>> tree_vertices; // per cycle position, root first
};

// Immutable simple undirected graph on vertices 0..n-1. Deletion operations
// return new graphs; vertex deletion relabels the survivors contiguously,
// preserving their relative order. Disconnected and empty graphs are
// first-class values (the counting recurrences produce both).
class Graph {
public:
    Graph() = default;

    // Validates and normalizes (u < v, sorted edge list).
    // Throws Errc::loop_edge / vertex_out_of_range / duplicate_edge.
    static Graph from_edge_list(int n, const std::vector<Edge>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const int> neighbors(int v) const { return adj_[(std::size_t)v]; }
    int degree(int v) const { return (int)adj_[(std::size_t)v].size(); }
    bool has_edge(int u, int v) const;

    Graph delete_edge(int u, int v) const;            // throws Errc::edge_not_present
    Graph delete_vertices(std::vector<int> s) const;  // throws Errc::vertex_out_of_range
    Graph delete_vertex(int v) const { return delete_vertices({v}); }

    // Maximal connected subgraphs, relabeled contiguously, ordered by the
    // smallest original vertex they contain.
    std::vector<Graph> connected_components() const;
    int component_count() const;
    bool is_connected() const; // false for the empty graph

    bool is_forest() const;   // acyclic, not necessarily connected
    bool is_tree() const;     // acyclic and connected

    // Length of the shortest cycle (BFS from every vertex); nullopt = acyclic.
    std::optional<int> girth() const;
    // Vertex sequence of one shortest cycle, when any cycle exists.
    std::optional<std::vector<int>> shortest_cycle() const;

    // Connected with exactly one cycle, i.e. connected and |E| = n.
    bool is_unicyclic() const;
    CycleDecomposition cycle_decomposition() const; // throws Errc::not_unicyclic

    // Relabel through a permutation: vertex v becomes perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    friend bool operator==(const Graph&, const Graph&);

private:
    void build_adjacency();
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

} // namespace hosoya
