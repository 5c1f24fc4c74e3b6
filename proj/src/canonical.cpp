#include "hosoya/canonical.hpp"

#include "hosoya/error.hpp"

#include <algorithm>
#include <deque>

namespace hosoya {

namespace {

// AHU over the subtree of v away from its parent; iterative post-order.
std::string ahu_subtree(const Graph& g, int root, int forbidden) {
    struct Frame {
        int vertex;
        int parent;
        std::size_t next_child = 0;
        std::vector<std::string> child_codes;
    };
    std::vector<Frame> stack;
    stack.push_back({root, forbidden, 0, {}});
    std::string result;
    while (!stack.empty()) {
        Frame& top = stack.back();
        auto nb = g.neighbors(top.vertex);
        if (top.next_child < nb.size()) {
            int w = nb[top.next_child++];
            if (w != top.parent) stack.push_back({w, top.vertex, 0, {}});
            continue;
        }
        std::sort(top.child_codes.begin(), top.child_codes.end());
        std::string code = "(";
        for (const auto& c : top.child_codes) code += c;
        code += ")";
        stack.pop_back();
        if (stack.empty()) {
            result = std::move(code);
        } else {
            stack.back().child_codes.push_back(std::move(code));
        }
    }
    return result;
}

} // namespace

std::string ahu_encode(const Graph& tree, int root) {
    if (!tree.is_tree()) raise(Errc::not_a_tree, "ahu_encode");
    if (root < 0 || root >= tree.vertex_count()) raise(Errc::vertex_out_of_range, std::to_string(root));
    return ahu_subtree(tree, root, -1);
}

std::vector<std::string> dihedral_minimum(std::vector<std::string> seq) {
    const std::size_t k = seq.size();
    if (k <= 1) return seq;
    std::vector<std::string> best = seq;
    std::vector<std::string> cur(k);
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (std::size_t shift = 0; shift < k; ++shift) {
            for (std::size_t i = 0; i < k; ++i) {
                std::size_t src = reflect ? (shift + k - i) % k : (shift + i) % k;
                cur[i] = seq[src];
            }
            if (cur < best) best = cur;
        }
    }
    return best;
}

std::string canonical_code(const Graph& g) {
    CycleDecomposition dec = g.cycle_decomposition(); // throws if not unicyclic
    const std::size_t k = dec.cycle.size();
    std::vector<std::string> tree_codes(k);
    for (std::size_t i = 0; i < k; ++i) {
        // AHU of the hanging tree: fold children by parent pointers
        // by encoding the subtree rooted at the cycle vertex inside the
        // hanging-tree vertex set.
        struct Frame {
            int vertex;
            std::size_t next_child = 0;
            std::vector<int> children;
            std::vector<std::string> child_codes;
        };
        int root = dec.cycle[i];
        auto children_of = [&](int v) {
            std::vector<int> out;
            for (int w : g.neighbors(v))
                if (w >= 0 && (std::size_t)w < dec.parent.size() && dec.parent[(std::size_t)w] == v)
                    out.push_back(w);
            return out;
        };
        std::vector<Frame> stack;
        stack.push_back({root, 0, children_of(root), {}});
        std::string code;
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next_child < top.children.size()) {
                int w = top.children[top.next_child++];
                stack.push_back({w, 0, children_of(w), {}});
                continue;
            }
            std::sort(top.child_codes.begin(), top.child_codes.end());
            std::string done = "(";
            for (const auto& c : top.child_codes) done += c;
            done += ")";
            stack.pop_back();
            if (stack.empty()) {
                code = std::move(done);
            } else {
                stack.back().child_codes.push_back(std::move(done));
            }
        }
        tree_codes[i] = std::move(code);
    }
    std::vector<std::string> minimal = dihedral_minimum(std::move(tree_codes));
    std::string out = k < 10 ? "0" + std::to_string(k) : std::to_string(k);
    out += ':';
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        if (i > 0) out += ',';
        out += minimal[i];
    }
    return out;
}

std::string free_tree_code(const Graph& tree) {
    if (!tree.is_tree()) raise(Errc::not_a_tree, "free_tree_code");
    const int n = tree.vertex_count();
    if (n == 1) return "T:()";
    // peel leaves until one or two centers remain
    std::vector<int> deg((std::size_t)n);
    std::vector<bool> removed((std::size_t)n, false);
    std::deque<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[(std::size_t)v] = tree.degree(v);
        if (deg[(std::size_t)v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::deque<int> next;
        for (int v : layer) {
            removed[(std::size_t)v] = true;
            --remaining;
            for (int w : tree.neighbors(v)) {
                if (removed[(std::size_t)w]) continue;
                if (--deg[(std::size_t)w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[(std::size_t)v]) centers.push_back(v);
    if (centers.size() == 1) return "T:" + ahu_subtree(tree, centers[0], -1);
    std::string a = ahu_subtree(tree, centers[0], centers[1]);
    std::string b = ahu_subtree(tree, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "B:" + a + b;
}

} // namespace hosoya
