#include "hosoya/families.hpp"
#include "hosoya/canonical.hpp"
#include "hosoya/error.hpp"
#include "hosoya/fibonacci.hpp"
#include "hosoya/matching.hpp"
#include "hosoya/random_graphs.hpp"

#include "support/builders.hpp"

#include <doctest.h>

#include <functional>
#include <random>
#include <set>

using namespace hosoya;
using namespace hosoya::testsupport;

TEST_CASE("named builds and their values") {
    Graph l73 = build(Lollipop{7, 3});
    CHECK(l73.vertex_count() == 7);
    CHECK(*l73.girth() == 3);
    CHECK(hosoya_index(l73).to_uint64() == 26);

    Graph u9 = build(UPrime{9});
    CHECK(u9.vertex_count() == 9);
    CHECK(*u9.girth() == 7);
    int pendants = 0;
    for (int v = 0; v < 9; ++v) pendants += u9.degree(v) == 1 ? 1 : 0;
    CHECK(pendants == 2);
    CHECK(u9.has_edge(0, 1)); // the two branch vertices are adjacent

    Graph l3max = build(L3Max{10, 4});
    CHECK(l3max.is_unicyclic());
    CHECK(*l3max.girth() == 4);
    CHECK(hosoya_index(l3max).to_uint64() == 109);
}

TEST_CASE("closed forms on pinned instances") {
    CHECK(closed_form_z(Lollipop{5, 3}).to_uint64() == 10);
    CHECK(closed_form_z(UDoublePrime{7}).to_uint64() == 25);
    CHECK(closed_form_z(L1Max{10, 4}).to_uint64() == 109);
    CHECK(closed_form_z(Path{5}).to_uint64() == 8);
    CHECK(closed_form_z(Star{6}).to_uint64() == 6);
    CHECK(closed_form_z(Cycle{10}).to_uint64() == 123);
}

TEST_CASE("closed form matches the computed value across the catalog") {
    for (int n = 5; n <= 25; ++n) {
        for (int k = 3; k <= n; ++k) CHECK(closed_form_z(Lollipop{n, k}) == hosoya_index(build(Lollipop{n, k})));
        for (int k = 3; k <= n - 2; ++k)
            for (int s = 1; s + k + 1 <= n; ++s) {
                L1 spec{n, k, s, n - s - k};
                CHECK(closed_form_z(spec) == hosoya_index(build(spec)));
            }
        for (int k = 3; k <= n - 3; ++k) {
            CHECK(closed_form_z(L1Max{n, k}) == hosoya_index(build(L1Max{n, k})));
            CHECK(closed_form_z(L3Max{n, k}) == hosoya_index(build(L3Max{n, k})));
        }
        CHECK(closed_form_z(UPrime{n}) == hosoya_index(build(UPrime{n})));
        if (n >= 6) CHECK(closed_form_z(UDoublePrime{n}) == hosoya_index(build(UDoublePrime{n})));
        CHECK(closed_form_z(Path{n}) == hosoya_index(build(Path{n})));
        CHECK(closed_form_z(Star{n}) == hosoya_index(build(Star{n})));
        CHECK(closed_form_z(Cycle{n}) == hosoya_index(build(Cycle{n})));
    }
}

TEST_CASE("value symmetries between mirrored girths") {
    for (int n = 5; n <= 60; ++n)
        for (int k = 3; k <= n - 1; ++k)
            CHECK(closed_form_z(Lollipop{n, k}) == closed_form_z(Lollipop{n, n - k + 2}));
    // branched-shape symmetry, computed on the built graphs
    for (int n = 10; n <= 24; ++n)
        for (int k = 3; k <= n - 3; ++k) {
            int mate = n - k;
            if (mate < 3 || mate > n - 3) continue;
            CHECK(hosoya_index(build(L1Max{n, k})) == hosoya_index(build(L1Max{n, mate})));
        }
}

TEST_CASE("the girth-3 forked tie") {
    for (int n = 10; n <= 16; ++n)
        CHECK(hosoya_index(build(L3Max{n, 3})) == hosoya_index(build(L3{n, 3, 2, n - 5, n - 7})));
}

TEST_CASE("path attachment") {
    Graph tri = cycle_graph(3);
    CHECK(attach_path(tri, 0, 1, 1) == tri);

    // gluing an (n-3)-path at position 1 of a 4-cycle vertex is the lollipop
    for (int n = 6; n <= 12; ++n) {
        Graph glued = attach_path(cycle_graph(4), 0, n - 3, 1);
        CHECK(canonical_code(glued) == canonical_code(build(Lollipop{n, 4})));
    }

    Graph spider = attach_path(tri, 0, 5, 3);
    CHECK(spider.vertex_count() == 7);
    CHECK(hosoya_index(spider) == hosoya_bruteforce(spider));

    CHECK_THROWS_AS(attach_path(tri, 0, 3, 4), Error);
    CHECK_THROWS_AS(attach_path(tri, 5, 3, 1), Error);
}

TEST_CASE("attachment value splits through the glue vertex") {
    // Z(P(n,k,G,v)) = F(k) F(n+1-k) (Z(G) - Z(G-v)) + F(n+1) Z(G-v),
    // derived from the pendant-edge recurrence; an independent functional
    // oracle for attach_path
    std::mt19937 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        int base_n = 2 + (int)(rng() % 6u);
        Graph g = random_connected_graph(rng, base_n, 2);
        int v = (int)(rng() % (unsigned)base_n);
        BigNat zg = hosoya_index(g);
        BigNat zgv = hosoya_index(g.delete_vertex(v));
        for (int n = 2; n <= 6; ++n)
            for (int k = 1; k <= n; ++k) {
                BigNat expected = fib_nat(k) * fib_nat(n + 1 - k) * (zg - zgv) + fib_nat(n + 1) * zgv;
                CHECK(hosoya_index(attach_path(g, v, n, k)) == expected);
            }
    }
}

TEST_CASE("catalog contents") {
    auto names = [](int n) {
        std::set<std::string> out;
        for (const auto& spec : family_catalog(n)) out.insert(family_name(spec));
        return out;
    };
    auto five = names(5);
    CHECK(five.count("cycle(5)"));
    CHECK(five.count("lollipop(5,3)"));
    CHECK(five.count("lollipop(5,4)"));
    CHECK(five.count("uprime(5)"));
    auto ten = names(10);
    CHECK(ten.count("l3max(10,4)"));
    CHECK(ten.count("l3(10,3,s=2,t=5,l=3)"));

    for (int n : {5, 8, 12}) {
        for (const auto& spec : family_catalog(n)) {
            Graph g = build(spec);
            CHECK(g.vertex_count() == n);
            CHECK(g.is_unicyclic());
        }
    }
    CHECK_THROWS_AS(family_catalog(4), Error);
}

TEST_CASE("forked shape decomposes into a cycle plus one forked tree") {
    Graph g = build(L3Max{9, 4});
    auto dec = g.cycle_decomposition();
    CHECK(dec.cycle.size() == 4);
    std::size_t total = 0, largest = 0;
    for (const auto& t : dec.tree_vertices) {
        total += t.size();
        largest = std::max(largest, t.size());
    }
    CHECK(total == 9);   // every vertex in exactly one hanging tree
    CHECK(largest == 6); // root, three stem vertices, two fork vertices
}

TEST_CASE("girth of every cyclic family is its k parameter") {
    for (int n = 8; n <= 14; ++n) {
        for (int k = 3; k <= n - 1; ++k) CHECK(*build(Lollipop{n, k}).girth() == k);
        for (int k = 3; k <= n - 3; ++k) {
            CHECK(*build(L1Max{n, k}).girth() == k);
            CHECK(*build(L2Max{n, k}).girth() == k);
            CHECK(*build(L3Max{n, k}).girth() == k);
        }
    }
}

TEST_CASE("side conditions are enforced") {
    auto code_of = [](const std::function<void()>& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::parse_error; // not reached
    };
    CHECK(code_of([] { (void)build(Lollipop{4, 9}); }) == Errc::invalid_parameters);
    CHECK(code_of([] { (void)build(Cycle{2}); }) == Errc::invalid_parameters);
    CHECK(code_of([] { (void)build(L1{10, 3, 0, 7}); }) == Errc::invalid_parameters);
    CHECK(code_of([] { (void)build(L3{10, 3, 2, 5, 6}); }) == Errc::invalid_parameters); // l > t
    CHECK(code_of([] { (void)build(L3Max{8, 6}); }) == Errc::invalid_parameters);        // t = 0
    CHECK(code_of([] { (void)build(UPrime{4}); }) == Errc::invalid_parameters);

    CHECK(code_of([] { (void)closed_form_z(L2Max{10, 4}); }) == Errc::no_closed_form);
    CHECK(code_of([] { (void)closed_form_z(L3{10, 4, 2, 4, 2}); }) == Errc::no_closed_form);
    CHECK(code_of([] { (void)closed_form_z(PathAttach{cycle_graph(3), 0, 3, 1}); }) ==
          Errc::no_closed_form);
    CHECK(has_closed_form(L1{9, 3, 2, 4}));
    CHECK(!has_closed_form(L2{9, 3, 2, 4}));
}

TEST_CASE("spec construction from tags") {
    auto spec = make_spec("lollipop", {{"n", 7}, {"k", 3}});
    CHECK(family_name(spec) == "lollipop(7,3)");
    CHECK_THROWS_AS(make_spec("nosuch", {}), Error);
    CHECK_THROWS_AS(make_spec("lollipop", {{"n", 7}}), Error); // missing k
    CHECK_THROWS_AS(make_spec("pathattach", {{"v", 0}, {"n", 3}, {"k", 1}}), Error); // no base
}
