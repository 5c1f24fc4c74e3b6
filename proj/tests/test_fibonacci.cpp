#include "hosoya/fibonacci.hpp"
#include "hosoya/error.hpp"

#include <doctest.h>

using namespace hosoya;

TEST_CASE("base cases and small values") {
    CHECK(fib(0).to_decimal() == "0");
    CHECK(fib(1).to_decimal() == "1");
    CHECK(fib(10).to_decimal() == "55");
    CHECK(fib(-3).to_decimal() == "2");
    CHECK(fib(-2).to_decimal() == "-1");
    CHECK(fib(-1).to_decimal() == "1");
}

TEST_CASE("recurrence holds on both sides of zero") {
    for (int n = -1000; n <= 998; ++n) CHECK(fib(n + 2) == fib(n + 1) + fib(n));
}

TEST_CASE("negative-index reflection") {
    for (int n = 0; n <= 1000; ++n) {
        BigInt expect = fib(n);
        if (n % 2 == 0) expect = -expect;
        CHECK(fib(-n) == expect);
    }
}

TEST_CASE("doubling agrees with plain iteration") {
    // independent route: linear iteration over BigNat
    BigNat a(0), b(1);
    for (int i = 0; i < 5000; ++i) {
        BigNat next = a + b;
        a = b;
        b = next;
    }
    CHECK(fib_nat(5000) == a);
    CHECK(fib_nat(5001) == b);
}

TEST_CASE("index limit is honored and large indices stay consistent") {
    CHECK(fib_nat(100000) == fib_nat(99999) + fib_nat(99998));
    CHECK_THROWS_AS(fib(kMaxFibIndex + 1), Error);
}

TEST_CASE("splitting identity") {
    CHECK(check_splitting_identity(7, 3));
    CHECK(check_splitting_identity(1, 1));
    CHECK(check_splitting_identity(40, 17));
    for (int n = 1; n <= 100; ++n)
        for (int k = 1; k <= n; ++k) CHECK(check_splitting_identity(n, k));
    CHECK_THROWS_AS(check_splitting_identity(5, 0), Error);
    CHECK_THROWS_AS(check_splitting_identity(5, 6), Error);
}

TEST_CASE("cassini-like identity, including m < n through negative indices") {
    CHECK(check_cassini_like(5, 3)); // 5*3 - 2*8 = -1 = (-1)^3 F(2)
    CHECK(check_cassini_like(4, 4));
    CHECK(check_cassini_like(3, 5)); // needs F(-2) = -1
    for (int m = 0; m <= 80; ++m)
        for (int n = 0; n <= 80; ++n) CHECK(check_cassini_like(m, n));
}

TEST_CASE("fib is strictly increasing from 2 on") {
    for (int n = 2; n < 300; ++n) CHECK(fib_nat(n) < fib_nat(n + 1));
}

TEST_CASE("product chain order and values") {
    auto chain = fib_product_chain(8);
    REQUIRE(chain.size() == 5);
    // F0F8 < F2F6 < F4F4 < F3F5 < F1F7
    std::vector<int> los{0, 2, 4, 3, 1};
    std::vector<std::uint64_t> values{0, 8, 9, 10, 13};
    for (std::size_t i = 0; i < chain.size(); ++i) {
        CHECK(chain[i].lo == los[i]);
        CHECK(chain[i].hi == 8 - los[i]);
        CHECK(chain[i].value.to_uint64() == values[i]);
    }

    auto tiny = fib_product_chain(2);
    REQUIRE(tiny.size() == 2);
    CHECK(tiny[0].value.to_uint64() == 0);
    CHECK(tiny[1].value.to_uint64() == 1);

    for (int m = 1; m <= 25; ++m) CHECK_NOTHROW(fib_product_chain(4 * m));
    CHECK_THROWS_AS(fib_product_chain(1), Error);
}

TEST_CASE("representative order covers each index pair once") {
    for (int n = 2; n <= 50; ++n) {
        auto order = increasing_product_indices(n);
        CHECK((int)order.size() == n / 2 + 1);
        std::vector<bool> seen((std::size_t)n / 2 + 1, false);
        for (int j : order) {
            CHECK(j >= 0);
            CHECK(j <= n / 2);
            CHECK(!seen[(std::size_t)j]);
            seen[(std::size_t)j] = true;
        }
    }
}
