#pragma once

#include "hosoya/bignum.hpp"
#include "hosoya/graph.hpp"

#include <vector>

namespace hosoya {

// Coefficient view of the matchings of a graph: coeffs[k] = number of
// k-matchings, k = 0..floor(n/2). coeffs[0] is always 1 (empty matching)
// and coeffs[1] = |E|. Trailing zeros are kept so the length is fixed by n.
struct MatchingPolynomial {
    std::vector<BigNat> coeffs;
    BigNat sum() const;
};

// Hard cap for the brute-force oracle (2^24 subsets worst case).
inline constexpr int kBruteForceEdgeLimit = 24;

// Direct enumeration of all edge-independent sets, including the empty one.
// The slow-but-obvious route the other implementations are checked against.
// Throws Errc::too_large beyond kBruteForceEdgeLimit edges.
BigNat hosoya_bruteforce(const Graph& g);

// Total matching count. Splits into connected components and multiplies;
// forest and unicyclic components take the linear-time paths below, anything
// else runs the edge deletion recurrence Z(G) = Z(G-e) + Z(G-u-v) on a
// shortest-cycle edge with memoization on a relabeling-invariant key.
// The empty and edgeless graphs count 1 (the empty matching).
BigNat hosoya_index(const Graph& g);

// Pure deletion-recurrence route (no forest/unicyclic shortcuts); kept as an
// independent cross-check of hosoya_index(). Memoized, desk-scale inputs only.
BigNat hosoya_recursive(const Graph& g);

// Rooted dynamic programming over the trees of an acyclic graph.
// Throws Errc::not_a_forest.
BigNat hosoya_forest(const Graph& g);

// One application of the edge recurrence to a cycle edge; both residuals are
// forests, so this is linear. Throws Errc::not_unicyclic.
BigNat hosoya_unicyclic(const Graph& g);

MatchingPolynomial matching_polynomial(const Graph& g);

} // namespace hosoya
