#pragma once

#include "hosoya/graph.hpp"

#include <string>
#include <vector>

namespace hosoya {

// Canonical parenthesization of a rooted tree: a leaf is "()", an internal
// node wraps the sorted concatenation of its child codes. Equal codes iff
// rooted-isomorphic. Throws Errc::not_a_tree.
std::string ahu_encode(const Graph& tree, int root);

// Label-invariant code for a connected unicyclic graph: the girth (two
// digits) followed by the cyclic sequence of AHU codes of the hanging trees,
// minimized over all rotations and both reflections. Equal codes iff
// isomorphic. Throws Errc::not_unicyclic.
std::string canonical_code(const Graph& g);

// Label-invariant code for a free tree (AHU at the centroid; for bicentral
// trees, the sorted pair of half codes). Equal codes iff isomorphic.
std::string free_tree_code(const Graph& tree);

// Dihedral-minimal rotation/reflection of a sequence, smallest element-wise.
std::vector<std::string> dihedral_minimum(std::vector<std::string> seq);

} // namespace hosoya
