#pragma once

#include "hosoya/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hosoya {

// Exhaustive generation is capped at this order (several tens of thousands of
// classes); the cap is a guard, not an architectural limit.
inline constexpr int kMaxEnumerationOrder = 14;

// All AHU codes of rooted trees on `size` vertices, one per isomorphism
// class, sorted. Memoized across calls.
const std::vector<std::string>& rooted_tree_codes(int size);

// Rooted tree from its AHU code; vertex 0 is the root, children appended in
// code order.
Graph tree_from_code(const std::string& code);

// Exactly one representative per isomorphism class of connected unicyclic
// graphs of order n (and girth girth_filter, if given), in ascending
// canonical-code order. A graph is generated as a cycle C_k with a rooted
// tree hung on each cycle vertex, deduplicated under the cycle's dihedral
// symmetry. Throws Errc::out_of_range outside 3 <= n <= 14.
std::vector<Graph> enumerate_unicyclic(int n, std::optional<int> girth_filter = std::nullopt);

std::size_t count_unicyclic(int n);

// One representative per isomorphism class of trees on n vertices (used by
// the tree-bound sweep); ascending code order.
std::vector<Graph> enumerate_trees(int n);

} // namespace hosoya
