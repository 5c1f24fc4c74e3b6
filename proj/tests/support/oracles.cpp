#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hosoya::testsupport {

std::vector<std::uint64_t> matching_counts_subsets(const Graph& g) {
    const auto& edges = g.edges();
    const int m = (int)edges.size();
    if (m > 20) throw std::runtime_error("subset oracle capped at 20 edges");
    std::vector<std::uint64_t> counts((std::size_t)(g.vertex_count() / 2 + 1), 0);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool independent = true;
        for (int i = 0; i < m && independent; ++i) {
            if (!(mask & (1u << i))) continue;
            for (int j = i + 1; j < m && independent; ++j) {
                if (!(mask & (1u << j))) continue;
                auto [a, b] = edges[(std::size_t)i];
                auto [c, d] = edges[(std::size_t)j];
                if (a == c || a == d || b == c || b == d) independent = false;
            }
        }
        if (independent) ++counts[(std::size_t)std::popcount(mask)];
    }
    return counts;
}

std::uint64_t hosoya_subsets(const Graph& g) {
    auto counts = matching_counts_subsets(g);
    return std::accumulate(counts.begin(), counts.end(), (std::uint64_t)0);
}

std::size_t count_connected_classes(int n, int m) {
    if (n > 7) throw std::runtime_error("labeled oracle capped at n = 7");
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    const int total = (int)all.size();
    if (m > total) return 0;

    std::vector<int> edge_index((std::size_t)(n * n), -1);
    for (std::size_t i = 0; i < all.size(); ++i)
        edge_index[(std::size_t)(all[i].first * n + all[i].second)] = (int)i;
    auto index_of = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return edge_index[(std::size_t)(u * n + v)];
    };

    // per permutation: edge bit -> edge bit
    std::vector<int> perm((std::size_t)n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> remaps;
    do {
        std::vector<int> remap((std::size_t)total);
        for (int i = 0; i < total; ++i)
            remap[(std::size_t)i] =
                index_of(perm[(std::size_t)all[(std::size_t)i].first],
                         perm[(std::size_t)all[(std::size_t)i].second]);
        remaps.push_back(std::move(remap));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::size_t classes = 0;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
        if (std::popcount(mask) != m) continue;
        // connectivity over all n vertices
        std::uint32_t reached = 1;
        for (int round = 0; round < n; ++round) {
            for (int i = 0; i < total; ++i) {
                if (!(mask & (1u << i))) continue;
                std::uint32_t ubit = 1u << all[(std::size_t)i].first;
                std::uint32_t vbit = 1u << all[(std::size_t)i].second;
                if (reached & (ubit | vbit)) reached |= ubit | vbit;
            }
        }
        if (std::popcount(reached) != n) continue;
        // canonical iff no permutation maps the mask strictly lower
        bool canonical = true;
        for (const auto& remap : remaps) {
            std::uint32_t image = 0;
            for (int i = 0; i < total; ++i)
                if (mask & (1u << i)) image |= 1u << remap[(std::size_t)i];
            if (image < mask) {
                canonical = false;
                break;
            }
        }
        if (canonical) ++classes;
    }
    return classes;
}

} // namespace hosoya::testsupport
