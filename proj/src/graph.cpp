#include "hosoya/graph.hpp"

#include "hosoya/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace hosoya {

Graph Graph::from_edge_list(int n, const std::vector<Edge>& pairs) {
    if (n < 0) raise(Errc::invalid_parameters, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u == v) raise(Errc::loop_edge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u < 0 || v < 0 || u >= n || v >= n)
            raise(Errc::vertex_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        raise(Errc::duplicate_edge,
              "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
    g.build_adjacency();
    return g;
}

void Graph::build_adjacency() {
    adj_.assign((std::size_t)n_, {});
    for (auto [u, v] : edges_) {
        adj_[(std::size_t)u].push_back(v);
        adj_[(std::size_t)v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph Graph::delete_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (!has_edge(u, v))
        raise(Errc::edge_not_present, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    Graph g;
    g.n_ = n_;
    g.edges_.reserve(edges_.size() - 1);
    for (auto e : edges_)
        if (e != Edge{u, v}) g.edges_.push_back(e);
    g.build_adjacency();
    return g;
}

Graph Graph::delete_vertices(std::vector<int> s) const {
    for (int v : s)
        if (v < 0 || v >= n_) raise(Errc::vertex_out_of_range, std::to_string(v));
    std::vector<bool> gone((std::size_t)n_, false);
    for (int v : s) gone[(std::size_t)v] = true;
    std::vector<int> newid((std::size_t)n_, -1);
    int next = 0;
    for (int v = 0; v < n_; ++v)
        if (!gone[(std::size_t)v]) newid[(std::size_t)v] = next++;
    Graph g;
    g.n_ = next;
    for (auto [u, v] : edges_)
        if (!gone[(std::size_t)u] && !gone[(std::size_t)v])
            g.edges_.emplace_back(newid[(std::size_t)u], newid[(std::size_t)v]);
    // relabeling preserves order, so the edge list stays sorted
    g.build_adjacency();
    return g;
}

namespace {

std::vector<int> component_ids(const Graph& g, int& count) {
    const int n = g.vertex_count();
    std::vector<int> comp((std::size_t)n, -1);
    count = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[(std::size_t)start] != -1) continue;
        std::deque<int> queue{start};
        comp[(std::size_t)start] = count;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (comp[(std::size_t)w] == -1) {
                    comp[(std::size_t)w] = count;
                    queue.push_back(w);
                }
            }
        }
        ++count;
    }
    return comp;
}

} // namespace

std::vector<Graph> Graph::connected_components() const {
    int count = 0;
    std::vector<int> comp = component_ids(*this, count);
    // component ids already follow smallest-original-vertex order
    std::vector<std::vector<int>> members((std::size_t)count);
    for (int v = 0; v < n_; ++v) members[(std::size_t)comp[(std::size_t)v]].push_back(v);
    std::vector<int> newid((std::size_t)n_, -1);
    for (auto& part : members)
        for (std::size_t i = 0; i < part.size(); ++i) newid[(std::size_t)part[i]] = (int)i;
    std::vector<std::vector<Edge>> part_edges((std::size_t)count);
    for (auto [u, v] : edges_)
        part_edges[(std::size_t)comp[(std::size_t)u]].emplace_back(newid[(std::size_t)u],
                                                                   newid[(std::size_t)v]);
    std::vector<Graph> out;
    out.reserve((std::size_t)count);
    for (int c = 0; c < count; ++c) {
        Graph g;
        g.n_ = (int)members[(std::size_t)c].size();
        g.edges_ = std::move(part_edges[(std::size_t)c]);
        std::sort(g.edges_.begin(), g.edges_.end());
        g.build_adjacency();
        out.push_back(std::move(g));
    }
    return out;
}

int Graph::component_count() const {
    int count = 0;
    component_ids(*this, count);
    return count;
}

bool Graph::is_connected() const {
    return n_ >= 1 && component_count() == 1;
}

bool Graph::is_forest() const {
    return edge_count() == n_ - component_count();
}

bool Graph::is_tree() const {
    return n_ >= 1 && edge_count() == n_ - 1 && is_connected();
}

std::optional<std::vector<int>> Graph::shortest_cycle() const {
    // BFS from every vertex; the shortest cycle through the root is found
    // when two BFS branches meet. Minimum over all roots is the girth.
    int best = -1;
    std::vector<int> best_cycle;
    std::vector<int> dist((std::size_t)n_), par((std::size_t)n_);
    for (int root = 0; root < n_; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        dist[(std::size_t)root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (best != -1 && 2 * dist[(std::size_t)v] >= best) break;
            for (int w : neighbors(v)) {
                if (w == par[(std::size_t)v]) continue;
                if (dist[(std::size_t)w] == -1) {
                    dist[(std::size_t)w] = dist[(std::size_t)v] + 1;
                    par[(std::size_t)w] = v;
                    queue.push_back(w);
                    continue;
                }
                int len = dist[(std::size_t)v] + dist[(std::size_t)w] + 1;
                if (best == -1 || len < best) {
                    // walk both branches up to the root and splice the cycle
                    std::vector<int> up_v, up_w;
                    for (int x = v; x != -1; x = par[(std::size_t)x]) up_v.push_back(x);
                    for (int x = w; x != -1; x = par[(std::size_t)x]) up_w.push_back(x);
                    // drop the common tail below the meeting ancestor
                    while (up_v.size() >= 2 && up_w.size() >= 2 &&
                           up_v[up_v.size() - 2] == up_w[up_w.size() - 2]) {
                        up_v.pop_back();
                        up_w.pop_back();
                    }
                    if (up_v.back() == up_w.back()) up_w.pop_back();
                    std::vector<int> cyc(up_v.begin(), up_v.end());
                    for (std::size_t i = up_w.size(); i-- > 0;) cyc.push_back(up_w[i]);
                    // branches meeting below the root give an even shorter cycle
                    if (best == -1 || (int)cyc.size() < best) {
                        best = (int)cyc.size();
                        best_cycle = std::move(cyc);
                    }
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best_cycle;
}

std::optional<int> Graph::girth() const {
    auto cyc = shortest_cycle();
    if (!cyc) return std::nullopt;
    return (int)cyc->size();
}

bool Graph::is_unicyclic() const {
    return n_ >= 3 && edge_count() == n_ && is_connected();
}

CycleDecomposition Graph::cycle_decomposition() const {
    if (!is_unicyclic()) raise(Errc::not_unicyclic, "cycle decomposition");
    // strip leaves until only the unique cycle remains
    std::vector<int> deg((std::size_t)n_);
    for (int v = 0; v < n_; ++v) deg[(std::size_t)v] = degree(v);
    std::deque<int> leaves;
    std::vector<bool> removed((std::size_t)n_, false);
    for (int v = 0; v < n_; ++v)
        if (deg[(std::size_t)v] == 1) leaves.push_back(v);
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop_front();
        removed[(std::size_t)v] = true;
        for (int w : neighbors(v)) {
            if (removed[(std::size_t)w]) continue;
            if (--deg[(std::size_t)w] == 1) leaves.push_back(w);
        }
    }
    CycleDecomposition dec;
    dec.parent.assign((std::size_t)n_, -1);
    int start = -1;
    for (int v = 0; v < n_; ++v)
        if (!removed[(std::size_t)v]) {
            start = v;
            break;
        }
    // walk the cycle, preferring the smaller-labeled neighbor first
    std::vector<bool> on_cycle((std::size_t)n_, false);
    for (int v = 0; v < n_; ++v) on_cycle[(std::size_t)v] = !removed[(std::size_t)v];
    int prev = -1, cur = start;
    do {
        dec.cycle.push_back(cur);
        int next = -1;
        for (int w : neighbors(cur))
            if (on_cycle[(std::size_t)w] && w != prev && (next == -1 || w < next)) next = w;
        // closing the cycle: the only remaining on-cycle neighbor is start
        prev = cur;
        cur = next;
    } while (cur != start && cur != -1);

    // hang trees: BFS out of each cycle vertex into the removed region
    dec.tree_vertices.assign(dec.cycle.size(), {});
    for (std::size_t i = 0; i < dec.cycle.size(); ++i) {
        int root = dec.cycle[i];
        auto& verts = dec.tree_vertices[i];
        verts.push_back(root);
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : neighbors(v)) {
                if (on_cycle[(std::size_t)w] || dec.parent[(std::size_t)w] != -1) continue;
                dec.parent[(std::size_t)w] = v;
                verts.push_back(w);
                queue.push_back(w);
            }
        }
    }
    return dec;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if ((int)perm.size() != n_) raise(Errc::invalid_parameters, "permutation size mismatch");
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (auto [u, v] : edges_) mapped.emplace_back(perm[(std::size_t)u], perm[(std::size_t)v]);
    return from_edge_list(n_, mapped);
}

bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
}

} // namespace hosoya
