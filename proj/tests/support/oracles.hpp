#pragma once

#include "hosoya/graph.hpp"

#include <cstdint>
#include <vector>

namespace hosoya::testsupport {

// Number of k-matchings by filtering all 2^m edge subsets for pairwise
// disjointness. Deliberately distinct from the library's counting routes;
// usable up to ~20 edges.
std::vector<std::uint64_t> matching_counts_subsets(const Graph& g);

std::uint64_t hosoya_subsets(const Graph& g);

// Isomorphism classes of connected graphs with n labeled vertices and m
// edges, deduplicated by minimizing the edge bitmask over all n!
// permutations. Independent of the library's canonical codes. n <= 7.
std::size_t count_connected_classes(int n, int m);

} // namespace hosoya::testsupport
