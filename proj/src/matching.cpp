#include "hosoya/matching.hpp"

#include "hosoya/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>

namespace hosoya {

BigNat MatchingPolynomial::sum() const {
    BigNat total;
    for (const auto& c : coeffs) total += c;
    return total;
}

// ---------------------------------------------------------------------------
// brute force

namespace {

struct BruteState {
    std::vector<std::uint64_t> edge_masks;
    std::uint64_t count = 0;

    void extend(std::size_t start, std::uint64_t used) {
        for (std::size_t i = start; i < edge_masks.size(); ++i) {
            if (edge_masks[i] & used) continue;
            ++count;
            extend(i + 1, used | edge_masks[i]);
        }
    }
};

// Endpoints remapped to a compact range so a 64-bit mask always suffices
// (at most 48 distinct endpoints under the 24-edge cap).
std::vector<std::uint64_t> edge_masks_of(const Graph& g) {
    std::vector<int> compact((std::size_t)g.vertex_count(), -1);
    int next = 0;
    std::vector<std::uint64_t> masks;
    masks.reserve((std::size_t)g.edge_count());
    for (auto [u, v] : g.edges()) {
        if (compact[(std::size_t)u] == -1) compact[(std::size_t)u] = next++;
        if (compact[(std::size_t)v] == -1) compact[(std::size_t)v] = next++;
        masks.push_back((1ull << compact[(std::size_t)u]) | (1ull << compact[(std::size_t)v]));
    }
    return masks;
}

} // namespace

BigNat hosoya_bruteforce(const Graph& g) {
    if (g.edge_count() > kBruteForceEdgeLimit)
        raise(Errc::too_large, "brute force capped at " + std::to_string(kBruteForceEdgeLimit) + " edges");
    BruteState state{edge_masks_of(g)};
    state.count = 1; // empty matching
    state.extend(0, 0);
    return BigNat(state.count);
}

// ---------------------------------------------------------------------------
// forest DP

namespace {

// Per-vertex pair over the rooted tree: value with the vertex exposed and
// value with the vertex matched into its subtree.
struct ExposedMatched {
    BigNat exposed{1};
    BigNat matched{0};
};

// Iterative post-order over the tree component containing root.
template <typename Node, typename Leafwise>
Node tree_fold(const Graph& g, int root, Leafwise&& combine) {
    std::vector<int> order, parent((std::size_t)g.vertex_count(), -2);
    order.reserve((std::size_t)g.vertex_count());
    std::vector<int> stack{root};
    parent[(std::size_t)root] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (parent[(std::size_t)w] != -2) continue;
            parent[(std::size_t)w] = v;
            stack.push_back(w);
        }
    }
    std::unordered_map<int, Node> values;
    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        Node node;
        for (int w : g.neighbors(v)) {
            if (parent[(std::size_t)w] != v) continue;
            combine(node, values.at(w));
            values.erase(w);
        }
        values[v] = std::move(node);
    }
    return values.at(root);
}

BigNat tree_hosoya(const Graph& g, int root) {
    auto top = tree_fold<ExposedMatched>(g, root, [](ExposedMatched& acc, const ExposedMatched& child) {
        BigNat child_total = child.exposed + child.matched;
        BigNat new_matched = acc.matched * child_total + acc.exposed * child.exposed;
        acc.exposed *= child_total;
        acc.matched = std::move(new_matched);
    });
    return top.exposed + top.matched;
}

} // namespace

BigNat hosoya_forest(const Graph& g) {
    if (!g.is_forest()) raise(Errc::not_a_forest, "hosoya_forest");
    BigNat result(1);
    std::vector<bool> seen((std::size_t)g.vertex_count(), false);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[(std::size_t)v]) continue;
        // mark the component, then fold it
        std::vector<int> stack{v};
        seen[(std::size_t)v] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(x))
                if (!seen[(std::size_t)w]) {
                    seen[(std::size_t)w] = true;
                    stack.push_back(w);
                }
        }
        result *= tree_hosoya(g, v);
    }
    return result;
}

BigNat hosoya_unicyclic(const Graph& g) {
    if (!g.is_unicyclic()) raise(Errc::not_unicyclic, "hosoya_unicyclic");
    auto dec = g.cycle_decomposition(); // linear, unlike the BFS girth scan
    int u = dec.cycle[0], v = dec.cycle[1];
    return hosoya_forest(g.delete_edge(u, v)) + hosoya_forest(g.delete_vertices({u, v}));
}

// ---------------------------------------------------------------------------
// general route

namespace {

// Relabeling key: iterated degree refinement ranks, ties broken by original
// index. Equal keys imply isomorphic graphs, so memo hits are always sound.
std::string refined_key(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color((std::size_t)n);
    for (int v = 0; v < n; ++v) color[(std::size_t)v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig((std::size_t)n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> neigh;
            for (int w : g.neighbors(v)) neigh.push_back(color[(std::size_t)w]);
            std::sort(neigh.begin(), neigh.end());
            neigh.push_back(color[(std::size_t)v]);
            sig[(std::size_t)v] = {std::move(neigh), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<int> next((std::size_t)n);
        int rank = 0;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
            next[(std::size_t)sorted[i].second] = rank;
        }
        if (next == color) break;
        color = std::move(next);
    }
    std::vector<int> by_color((std::size_t)n);
    for (int v = 0; v < n; ++v) by_color[(std::size_t)v] = v;
    std::sort(by_color.begin(), by_color.end(), [&](int a, int b) {
        return std::pair(color[(std::size_t)a], a) < std::pair(color[(std::size_t)b], b);
    });
    std::vector<int> newid((std::size_t)n);
    for (int i = 0; i < n; ++i) newid[(std::size_t)by_color[(std::size_t)i]] = i;
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) {
        int a = newid[(std::size_t)u], b = newid[(std::size_t)v];
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    std::string key = std::to_string(n);
    for (auto [u, v] : edges) {
        key += ';';
        key += std::to_string(u);
        key += ',';
        key += std::to_string(v);
    }
    return key;
}

using Memo = std::unordered_map<std::string, BigNat>;

Edge recursion_edge(const Graph& g) {
    auto cycle = g.shortest_cycle();
    if (cycle) return {(*cycle)[0], (*cycle)[1]};
    return g.edges().front();
}

BigNat hosoya_hybrid(const Graph& g, Memo& memo);

BigNat hosoya_hybrid_component(const Graph& g, Memo& memo) {
    if (g.edge_count() == 0) return BigNat(1);
    if (g.is_forest()) return hosoya_forest(g);
    if (g.edge_count() == g.vertex_count()) return hosoya_unicyclic(g);
    std::string key = refined_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto [u, v] = recursion_edge(g);
    BigNat value = hosoya_hybrid(g.delete_edge(u, v), memo) +
                   hosoya_hybrid(g.delete_vertices({u, v}), memo);
    memo.emplace(std::move(key), value);
    return value;
}

BigNat hosoya_hybrid(const Graph& g, Memo& memo) {
    if (g.vertex_count() == 0 || g.edge_count() == 0) return BigNat(1);
    if (g.component_count() == 1) return hosoya_hybrid_component(g, memo);
    BigNat result(1);
    for (const auto& comp : g.connected_components()) result *= hosoya_hybrid_component(comp, memo);
    return result;
}

BigNat hosoya_pure(const Graph& g, Memo& memo) {
    if (g.edge_count() == 0) return BigNat(1);
    if (g.component_count() > 1) {
        BigNat result(1);
        for (const auto& comp : g.connected_components()) result *= hosoya_pure(comp, memo);
        return result;
    }
    std::string key = refined_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto [u, v] = recursion_edge(g);
    BigNat value =
        hosoya_pure(g.delete_edge(u, v), memo) + hosoya_pure(g.delete_vertices({u, v}), memo);
    memo.emplace(std::move(key), value);
    return value;
}

} // namespace

BigNat hosoya_index(const Graph& g) {
    Memo memo;
    return hosoya_hybrid(g, memo);
}

BigNat hosoya_recursive(const Graph& g) {
    Memo memo;
    return hosoya_pure(g, memo);
}

// ---------------------------------------------------------------------------
// matching polynomial

namespace {

using Poly = std::vector<BigNat>; // tight: no trailing zeros (constant 1 = {1})

Poly poly_one() { return {BigNat(1)}; }

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_shift(Poly a) {
    if (a.empty()) return a;
    a.insert(a.begin(), BigNat(0));
    return a;
}

struct PolyPair {
    Poly exposed{poly_one()};
    Poly matched{};
};

Poly tree_poly(const Graph& g, int root) {
    auto top = tree_fold<PolyPair>(g, root, [](PolyPair& acc, const PolyPair& child) {
        Poly child_total = poly_add(child.exposed, child.matched);
        Poly new_matched =
            poly_add(poly_mul(acc.matched, child_total), poly_shift(poly_mul(acc.exposed, child.exposed)));
        acc.exposed = poly_mul(acc.exposed, child_total);
        acc.matched = std::move(new_matched);
    });
    return poly_add(top.exposed, top.matched);
}

Poly poly_of(const Graph& g);

Poly poly_of_component(const Graph& g) {
    if (g.edge_count() == 0) return poly_one();
    if (g.is_forest()) return tree_poly(g, 0);
    auto cycle = g.shortest_cycle();
    int u = (*cycle)[0], v = (*cycle)[1];
    return poly_add(poly_of(g.delete_edge(u, v)), poly_shift(poly_of(g.delete_vertices({u, v}))));
}

Poly poly_of(const Graph& g) {
    Poly result = poly_one();
    for (const auto& comp : g.connected_components()) result = poly_mul(result, poly_of_component(comp));
    return result;
}

} // namespace

MatchingPolynomial matching_polynomial(const Graph& g) {
    Poly p = poly_of(g);
    p.resize((std::size_t)(g.vertex_count() / 2 + 1));
    return MatchingPolynomial{std::move(p)};
}

} // namespace hosoya
