#include "hosoya/enumerate.hpp"

#include "hosoya/canonical.hpp"
#include "hosoya/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace hosoya {

namespace {

std::mutex tree_codes_mutex;

// codes[size] = sorted AHU codes of all rooted trees on `size` vertices.
// A tree is a root plus a multiset of child subtrees; multisets are listed
// as code-ascending sequences so each class appears exactly once and the
// concatenation is already in AHU child order.
std::vector<std::vector<std::string>>& tree_code_table() {
    static std::vector<std::vector<std::string>> codes{{}, {"()"}};
    return codes;
}

struct Item {
    std::string code;
    int size;
};

void extend_tree_codes(int target) {
    auto& codes = tree_code_table();
    while ((int)codes.size() <= target) {
        int m = (int)codes.size();
        // all smaller trees, ordered by code
        std::vector<Item> items;
        for (int s = 1; s < m; ++s)
            for (const auto& c : codes[(std::size_t)s]) items.push_back({c, s});
        std::sort(items.begin(), items.end(),
                  [](const Item& a, const Item& b) { return a.code < b.code; });
        std::vector<std::string> result;
        std::string children;
        auto rec = [&](auto&& self, int remaining, std::size_t min_item) -> void {
            if (remaining == 0) {
                result.push_back("(" + children + ")");
                return;
            }
            for (std::size_t i = min_item; i < items.size(); ++i) {
                if (items[i].size > remaining) continue;
                std::size_t len = children.size();
                children += items[i].code;
                self(self, remaining - items[i].size, i);
                children.resize(len);
            }
        };
        rec(rec, m - 1, 0);
        std::sort(result.begin(), result.end());
        codes.push_back(std::move(result));
    }
}

// Hang the tree `code` at `root`, appending fresh vertices from next_vertex.
void attach_tree_code(std::vector<Edge>& edges, int& next_vertex, int root,
                      const std::string& code) {
    std::vector<int> stack;
    for (char c : code) {
        if (c == '(') {
            int vertex = stack.empty() ? root : next_vertex++;
            if (!stack.empty()) edges.emplace_back(stack.back(), vertex);
            stack.push_back(vertex);
        } else {
            stack.pop_back();
        }
    }
}

std::vector<int> dihedral_min_ids(const std::vector<int>& seq) {
    const std::size_t k = seq.size();
    std::vector<int> best = seq, cur(k);
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (std::size_t shift = 0; shift < k; ++shift) {
            for (std::size_t i = 0; i < k; ++i)
                cur[i] = seq[reflect ? (shift + k - i) % k : (shift + i) % k];
            if (cur < best) best = cur;
        }
    }
    return best;
}

} // namespace

const std::vector<std::string>& rooted_tree_codes(int size) {
    if (size < 1) raise(Errc::out_of_range, "rooted trees need size >= 1");
    std::lock_guard<std::mutex> lock(tree_codes_mutex);
    extend_tree_codes(size);
    return tree_code_table()[(std::size_t)size];
}

Graph tree_from_code(const std::string& code) {
    std::vector<Edge> edges;
    int next = 1;
    attach_tree_code(edges, next, 0, code);
    return Graph::from_edge_list(next, edges);
}

std::vector<Graph> enumerate_unicyclic(int n, std::optional<int> girth_filter) {
    if (n < 3 || n > kMaxEnumerationOrder)
        raise(Errc::out_of_range, "enumeration supports 3 <= n <= " +
                                      std::to_string(kMaxEnumerationOrder));
    if (girth_filter && (*girth_filter < 3 || *girth_filter > n))
        raise(Errc::out_of_range, "girth filter outside [3, n]");

    // items: all rooted trees of size <= n - 2 (a hung tree includes its
    // cycle vertex as root), globally indexed in code order per size
    std::vector<std::pair<Graph, std::string>> found;
    for (int k = 3; k <= n; ++k) {
        if (girth_filter && *girth_filter != k) continue;
        int max_tree = n - k + 1;
        std::vector<std::string> item_codes;
        std::vector<int> item_sizes;
        for (int s = 1; s <= max_tree; ++s)
            for (const auto& c : rooted_tree_codes(s)) {
                item_codes.push_back(c);
                item_sizes.push_back(s);
            }
        std::set<std::vector<int>> necklaces;
        std::vector<int> assignment((std::size_t)k);
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == k) {
                if (remaining == 0) necklaces.insert(dihedral_min_ids(assignment));
                return;
            }
            int slots_left = k - pos - 1;
            for (std::size_t i = 0; i < item_codes.size(); ++i) {
                int sz = item_sizes[i];
                if (remaining - sz < slots_left) continue; // every later slot needs >= 1
                assignment[(std::size_t)pos] = (int)i;
                self(self, pos + 1, remaining - sz);
            }
        };
        rec(rec, 0, n);
        for (const auto& ids : necklaces) {
            std::vector<Edge> edges;
            for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, k - 1);
            int next = k;
            for (int i = 0; i < k; ++i) attach_tree_code(edges, next, i, item_codes[(std::size_t)ids[(std::size_t)i]]);
            Graph g = Graph::from_edge_list(n, edges);
            std::string code = canonical_code(g);
            found.emplace_back(std::move(g), std::move(code));
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [g, code] : found) out.push_back(std::move(g));
    return out;
}

std::size_t count_unicyclic(int n) {
    return enumerate_unicyclic(n).size();
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) raise(Errc::out_of_range, "enumerate_trees needs n >= 1");
    std::map<std::string, Graph> by_code;
    for (const auto& code : rooted_tree_codes(n)) {
        Graph g = tree_from_code(code);
        by_code.emplace(free_tree_code(g), std::move(g));
    }
    std::vector<Graph> out;
    out.reserve(by_code.size());
    for (auto& [code, g] : by_code) out.push_back(std::move(g));
    return out;
}

} // namespace hosoya
