#pragma once

#include "hosoya/bignum.hpp"
#include "hosoya/families.hpp"
#include "hosoya/graph.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace hosoya {

enum class Verdict { pass, fail, skip };

const char* verdict_name(Verdict v);

// One Z-value group of a ranking: all isomorphism classes attaining z.
struct RankEntry {
    int rank = 0; // 1-based over distinct values, descending
    BigNat z;
    int multiplicity = 0;
    std::vector<std::pair<std::string, std::string>> members; // (canonical code, label or "unnamed")
};

// Outcome of one executable check. A failed check always carries a witness
// with enough data (edge lists, both values) to recompute by hand.
struct CheckResult {
    std::string check;
    std::map<std::string, std::string> params;
    Verdict verdict = Verdict::pass;
    std::string detail;
    nlohmann::json witness; // null unless verdict == fail
    std::vector<RankEntry> entries;

    bool passed() const { return verdict != Verdict::fail; }
};

// Rank a set of graphs by Hosoya value (descending). Classes with equal z
// are grouped; codes within a group ascend. label_n selects the family
// catalog used to label recognized graphs (0 = no labels).
std::vector<RankEntry> rank_by_hosoya(const std::vector<Graph>& graphs, int label_n, int jobs = 0);

// The published top-of-the-order listing for 5 <= n <= 10, checked against
// exhaustive enumeration: every value, every equality, and the fact that all
// remaining unicyclic graphs fall strictly below the last listed value.
CheckResult verify_small_ordering(int n, int jobs = 0);

// The largest n-1 Hosoya indices for n >= 11: the cycle first, then every
// lollipop (paired k <-> n-k+2, even girths ascending then odd descending),
// then the girth-4 forked shape, uniquely, ahead of all other graphs.
// Exhaustive for n <= 14; formula_only checks the named-family chain at any n.
CheckResult verify_largest_ordering(int n, bool formula_only = false, int jobs = 0);

// Non-cycle maximum: max Z over unicyclic graphs other than C_n equals
// F(n+1) + 2 F(n-3), attained exactly by the girth-4 and girth-(n-2)
// lollipops. Exhaustive, 5 <= n <= 14.
CheckResult verify_noncycle_bound(int n, int jobs = 0);

// Fixed girth maximum: the lollipop is the unique maximizer at its girth and
// hits F(n+1) + F(k-1) F(n-k+1). Exhaustive, 3 <= k <= n-2, n <= 14.
CheckResult verify_girth_max(int n, int k, int jobs = 0);

// Fixed girth second maximum: the case table over k (near-cycle girths give
// the U' / U'' shapes, otherwise the parity of k and n picks the branched L1
// or forked L3 shape, with the documented tie at k = (n-2)/2). 10 <= n <= 14.
CheckResult verify_girth_second_max(int n, int k, int jobs = 0);

// Sliding the attachment point of a path across positions 1..n orders the
// Hosoya values as the interleaved even/odd chain. Degenerate bases (a
// single vertex) are reported as skip.
CheckResult verify_path_position_chain(const Graph& g, int v, int n);

// The two endpoint graphs of the path-sliding transformation; at least one
// strictly beats the split graph.
struct SlideTriple {
    Graph g1, g2, g3;
    std::string description;
};

// Build the triple from a base graph, a marked path [u, interior..., v]
// whose interior vertices have degree 2 in base, and the split position k of
// a fresh n-path. Throws Errc::malformed_triple.
SlideTriple make_slide_triple(const Graph& base, const std::vector<int>& path, int k, int n);

CheckResult verify_path_slide(const SlideTriple& triple);

// Closed-form chains among the named families (the branched-L1 chain, the
// lollipop chain, the forked-L3 maximum at girth 4, and the cross-family
// comparisons), exact for 11 <= n <= 200.
CheckResult verify_family_chains(int n);

struct IdentityBounds {
    int recurrence = 1000; // F(i+2) = F(i+1) + F(i) over |i| <= recurrence
    int negation = 1000;   // F(-i) = (-1)^(i+1) F(i) over 0 <= i <= negation
    int splitting = 300;   // splitting identity over 1 <= k <= n <= splitting
    int cassini = 300;     // Cassini-like identity over 0 <= m,n <= cassini
    int chain = 100;       // product chain for 2 <= n <= chain
};

CheckResult verify_fib_identities(const IdentityBounds& bounds = {});

// Seeded corpus of position-chain instances over random connected bases
// (bases up to 8 vertices, paths up to 7).
std::vector<CheckResult> run_chain_corpus(unsigned seed, int count);

// Sliding triples derived from small cycles, total order <= 10, including
// adjacent endpoints (no interior vertices).
std::vector<CheckResult> run_slide_corpus();

// Representative girths in strictly-decreasing Hosoya order.
std::vector<int> lollipop_value_order(int n); // reps [3, (n+2)/2]
std::vector<int> l1_value_order(int n);       // reps [3, n/2]

// Report serialization. JSON schema per check:
// { "check": str, "params": obj, "verdict": "pass"|"fail"|"skip",
//   "entries": [...], "witness": obj|null }
nlohmann::json to_json(const CheckResult& result);
std::string to_text(const CheckResult& result);

} // namespace hosoya
