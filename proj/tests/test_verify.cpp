#include "hosoya/verify.hpp"
#include "hosoya/error.hpp"
#include "hosoya/matching.hpp"

#include "support/builders.hpp"

#include <doctest.h>

using namespace hosoya;
using namespace hosoya::testsupport;

TEST_CASE("published listings reproduce") {
    for (int n = 5; n <= 10; ++n) {
        CheckResult r = verify_small_ordering(n);
        CHECK(r.verdict == Verdict::pass);
        REQUIRE(!r.entries.empty());
        CHECK(r.entries[0].multiplicity == 1); // the cycle alone on top
    }
    CHECK_THROWS_AS(verify_small_ordering(4), Error);
    CHECK_THROWS_AS(verify_small_ordering(11), Error);
}

TEST_CASE("largest-ordering check, exhaustive and formula modes") {
    CheckResult r = verify_largest_ordering(11);
    CHECK(r.verdict == Verdict::pass);
    // rank 1: cycle; last expected rank: the girth-4 fork at 177, unique
    bool saw_177 = false;
    for (const auto& e : r.entries)
        if (e.z == BigNat(177)) {
            saw_177 = true;
            CHECK(e.multiplicity == 1);
            CHECK(e.members[0].second == "l3max(11,4)");
        }
    CHECK(saw_177);

    CHECK(verify_largest_ordering(60, true).verdict == Verdict::pass);
    CHECK_THROWS_AS(verify_largest_ordering(10), Error);
    CHECK_THROWS_AS(verify_largest_ordering(15, false), Error);
    CHECK_THROWS_AS(verify_largest_ordering(201, true), Error);
}

TEST_CASE("lollipop representative order") {
    CHECK(lollipop_value_order(11) == std::vector<int>{4, 6, 5, 3});
    CHECK(lollipop_value_order(12) == std::vector<int>{4, 6, 7, 5, 3});
    CHECK(lollipop_value_order(13) == std::vector<int>{4, 6, 7, 5, 3});
    CHECK(lollipop_value_order(14) == std::vector<int>{4, 6, 8, 7, 5, 3});
    CHECK(l1_value_order(14) == std::vector<int>{4, 6, 7, 5, 3});
}

TEST_CASE("non-cycle bound, including the n=6 single-argmax case") {
    CheckResult r6 = verify_noncycle_bound(6);
    CHECK(r6.verdict == Verdict::pass);
    CheckResult r8 = verify_noncycle_bound(8);
    CHECK(r8.verdict == Verdict::pass);
    CHECK_THROWS_AS(verify_noncycle_bound(4), Error);
}

TEST_CASE("girth maximum") {
    CheckResult r = verify_girth_max(9, 4);
    CHECK(r.verdict == Verdict::pass);
    REQUIRE(!r.entries.empty());
    CHECK(r.entries[0].z == BigNat(71));

    CheckResult r75 = verify_girth_max(7, 5);
    CHECK(r75.verdict == Verdict::pass);
    CHECK(r75.entries[0].z == BigNat(27));

    CheckResult r125 = verify_girth_max(12, 5);
    CHECK(r125.verdict == Verdict::pass);
    CHECK(r125.entries[0].z == BigNat(296)); // F(13) + F(4) F(8)
    CHECK(r125.entries[0].multiplicity == 1);
    CHECK_THROWS_AS(verify_girth_max(9, 8), Error);
}

TEST_CASE("girth second maximum cases") {
    // the even-k tie at k = (n-2)/2: both shapes at 109
    CheckResult tie = verify_girth_second_max(10, 4);
    CHECK(tie.verdict == Verdict::pass);
    REQUIRE(tie.entries.size() >= 2);
    CHECK(tie.entries[1].z == BigNat(109));
    CHECK(tie.entries[1].multiplicity == 2);

    // near-cycle girth: the one-pendant-pair shape
    CheckResult u13 = verify_girth_second_max(13, 11);
    CHECK(u13.verdict == Verdict::pass);
    CHECK(u13.entries[1].z == BigNat(432));
    CHECK(u13.entries[1].multiplicity == 1);

    // k = (n-2)/2 again at n=12, k=5: a tie despite odd k
    CheckResult k5 = verify_girth_second_max(12, 5);
    CHECK(k5.verdict == Verdict::pass);
    CHECK(k5.entries[1].z == BigNat(281));
    CHECK(k5.entries[1].multiplicity == 2);

    CHECK_THROWS_AS(verify_girth_second_max(9, 4), Error);
}

TEST_CASE("path position chain") {
    CheckResult r = verify_path_position_chain(cycle_graph(3), 0, 6);
    CHECK(r.verdict == Verdict::pass);

    CheckResult degenerate = verify_path_position_chain(Graph::from_edge_list(1, {}), 0, 5);
    CHECK(degenerate.verdict == Verdict::skip);

    auto corpus = run_chain_corpus(99, 25);
    for (const auto& c : corpus) CHECK(c.verdict != Verdict::fail);
}

TEST_CASE("path sliding triples") {
    auto corpus = run_slide_corpus();
    CHECK(corpus.size() > 50);
    for (const auto& c : corpus) CHECK(c.verdict == Verdict::pass);

    // malformed: pendant hanging off an interior path vertex
    Graph bad_base = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}});
    try {
        (void)make_slide_triple(bad_base, {0, 1, 2}, 2, 5);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::malformed_triple);
    }
    // base equal to the marked path
    CHECK_THROWS_AS(make_slide_triple(path_graph(3), {0, 1, 2}, 2, 5), Error);
    // k out of range
    CHECK_THROWS_AS(make_slide_triple(cycle_graph(4), {0, 1}, 1, 5), Error);
}

TEST_CASE("a fabricated losing triple fails with a witness") {
    SlideTriple fake;
    fake.g1 = cycle_graph(6);  // Z = 18
    fake.g2 = path_graph(2);   // Z = 2
    fake.g3 = path_graph(3);   // Z = 3
    fake.description = "fabricated";
    CheckResult r = verify_path_slide(fake);
    CHECK(r.verdict == Verdict::fail);
    REQUIRE(!r.witness.is_null());
    CHECK(r.witness.contains("graph"));
    CHECK(r.witness["z1"] == "18");
}

TEST_CASE("family chains") {
    CHECK(verify_family_chains(11).verdict == Verdict::pass);
    CHECK(verify_family_chains(14).verdict == Verdict::pass);
    CHECK(verify_family_chains(100).verdict == Verdict::pass);
    CHECK_THROWS_AS(verify_family_chains(10), Error);
    CHECK_THROWS_AS(verify_family_chains(201), Error);
}

TEST_CASE("identity sweeps at reduced bounds") {
    IdentityBounds bounds;
    bounds.recurrence = 200;
    bounds.negation = 200;
    bounds.splitting = 60;
    bounds.cassini = 60;
    bounds.chain = 40;
    CheckResult r = verify_fib_identities(bounds);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("reports serialize deterministically") {
    CheckResult a = verify_small_ordering(7, 1);
    CheckResult b = verify_small_ordering(7, 2);
    CHECK(to_json(a).dump() == to_json(b).dump());
    auto doc = to_json(a);
    CHECK(doc.contains("check"));
    CHECK(doc.contains("params"));
    CHECK(doc.contains("verdict"));
    CHECK(doc.contains("entries"));
    CHECK(doc.contains("witness"));
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["witness"].is_null());
    std::string text = to_text(a);
    CHECK(text.rfind("PASS", 0) == 0);
}

TEST_CASE("ranking helper groups equal values") {
    std::vector<Graph> graphs{cycle_graph(5), build(Lollipop{5, 3}), build(Lollipop{5, 4})};
    auto entries = rank_by_hosoya(graphs, 5);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].z == BigNat(11));
    CHECK(entries[0].multiplicity == 1);
    CHECK(entries[1].z == BigNat(10));
    CHECK(entries[1].multiplicity == 2);
    CHECK(entries[1].members[0].second.rfind("lollipop", 0) == 0);
}
