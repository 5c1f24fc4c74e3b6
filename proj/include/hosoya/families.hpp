#pragma once

#include "hosoya/bignum.hpp"
#include "hosoya/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hosoya {

// Parametric graph families. Vertex labeling of build() is deterministic:
// cycle vertices 0..k-1 (edges i -- i+1 and k-1 -- 0), then attachment paths
// appended in declaration order, each path consecutive from its attachment.

struct Path { int n; };               // vertices 0-1-...-(n-1)
struct Star { int n; };               // center 0
struct Cycle { int n; };
struct Lollipop { int n, k; };        // C_k plus a pendant path of n-k vertices at vertex 0

// Cycle with two branch vertices 0 and 1 (adjacent): a path of t vertices at
// 0 and a path of s vertices at 1; s + t + k = n, s,t >= 1.
struct L1 { int n, k, s, t; };
// One cycle vertex 0 carrying two pendant paths of t and s vertices.
struct L2 { int n, k, s, t; };
// Stem of t vertices at cycle vertex 0; a second path of s vertices hangs at
// stem vertex l (1-based along the stem); s + t + k = n, 1 <= l <= t.
struct L3 { int n, k, s, t, l; };

struct L1Max { int n, k; };           // = L1(n, k, 2, n-k-2)
struct L2Max { int n, k; };           // = L2(n, k, 2, n-k-2)
struct L3Max { int n, k; };           // = L3(n, k, 2, n-k-2, 1): fork right next to the cycle
struct UPrime { int n; };             // = L1(n, n-2, 1, 1)
struct UDoublePrime { int n; };       // = L1(n, n-3, 2, 1)

// Graph obtained by identifying vertex v of base with position k of a fresh
// path on n vertices (adds n-1 vertices).
struct PathAttach {
    Graph base;
    int v, n, k;
};

using FamilySpec = std::variant<Path, Star, Cycle, Lollipop, L1, L2, L3, L1Max, L2Max, L3Max,
                                UPrime, UDoublePrime, PathAttach>;

// Throws Errc::invalid_parameters when a side condition fails.
Graph build(const FamilySpec& spec);

// Exact closed-form Hosoya value where one is known (Path, Star, Cycle,
// Lollipop, L1 with any s,t, L1Max, L3Max, UPrime, UDoublePrime).
// Throws Errc::no_closed_form for the rest; hosoya_index() covers those.
BigNat closed_form_z(const FamilySpec& spec);
bool has_closed_form(const FamilySpec& spec);

Graph attach_path(const Graph& g, int v, int n, int k);

// Lowercase tag, e.g. "lollipop". Matches the CLI --name values.
std::string family_tag(const FamilySpec& spec);
// Tag plus parameters, e.g. "lollipop(10,4)": the label used in reports.
std::string family_name(const FamilySpec& spec);

// Every named family instance of order n (n >= 5): the cycle, all lollipops,
// the maximal L1/L2/L3 shapes for each valid girth, both near-cycle
// second-maximal graphs, and the girth-3 tie partner of L3Max.
std::vector<FamilySpec> family_catalog(int n);

// Build a spec from a tag and named integer parameters (n, k, s, t, l, v);
// PathAttach additionally takes its base graph. Used by the CLI and bindings.
FamilySpec make_spec(const std::string& tag, const std::map<std::string, int>& params,
                     const std::optional<Graph>& base = std::nullopt);

} // namespace hosoya
