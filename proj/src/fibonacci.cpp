#include "hosoya/fibonacci.hpp"

#include "hosoya/error.hpp"

#include <mutex>

namespace hosoya {

namespace {

constexpr std::int64_t kFibCacheLimit = 4096;

// Cache of F(0..k) for small indices; identity sweeps hit these constantly.
std::vector<BigNat>& fib_cache() {
    static std::vector<BigNat> cache = {BigNat(0), BigNat(1)};
    return cache;
}
std::mutex fib_cache_mutex;

// Fast doubling: returns (F(n), F(n+1)).
std::pair<BigNat, BigNat> fib_pair(std::int64_t n) {
    if (n == 0) return {BigNat(0), BigNat(1)};
    auto [a, b] = fib_pair(n / 2); // a = F(m), b = F(m+1), m = n/2
    BigNat two_b_minus_a = b + b - a;
    BigNat c = a * two_b_minus_a; // F(2m)
    BigNat d = a * a + b * b;     // F(2m+1)
    if (n % 2 == 0) return {std::move(c), std::move(d)};
    return {d, c + d};
}

} // namespace

BigNat fib_nat(std::int64_t n) {
    if (n < 0) raise(Errc::domain_error, "fib_nat requires n >= 0");
    if (n > kMaxFibIndex) raise(Errc::out_of_range, "fib index beyond supported limit");
    if (n <= kFibCacheLimit) {
        std::lock_guard<std::mutex> lock(fib_cache_mutex);
        auto& cache = fib_cache();
        while ((std::int64_t)cache.size() <= n) {
            std::size_t m = cache.size();
            cache.push_back(cache[m - 1] + cache[m - 2]);
        }
        return cache[(std::size_t)n];
    }
    return fib_pair(n).first;
}

BigInt fib(std::int64_t n) {
    if (n >= 0) return BigInt(fib_nat(n));
    std::int64_t m = -n;
    // F(-m) = (-1)^(m+1) F(m)
    return BigInt(fib_nat(m), m % 2 == 0);
}

bool check_splitting_identity(std::int64_t n, std::int64_t k) {
    if (k < 1 || k > n) raise(Errc::domain_error, "splitting identity requires 1 <= k <= n");
    BigNat lhs = fib_nat(n);
    BigNat rhs = fib_nat(k) * fib_nat(n - k + 1) + fib_nat(k - 1) * fib_nat(n - k);
    return lhs == rhs;
}

bool check_cassini_like(std::int64_t m, std::int64_t n) {
    BigInt lhs = fib(m) * fib(n + 1) - fib(n) * fib(m + 1);
    BigInt rhs = fib(m - n);
    if (n % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

std::vector<int> increasing_product_indices(int sum) {
    std::vector<int> order;
    int half = sum / 2;
    for (int j = 0; j <= half; j += 2) order.push_back(j);
    int start_odd = half % 2 == 1 ? half : half - 1;
    for (int j = start_odd; j >= 1; j -= 2) order.push_back(j);
    return order;
}

std::vector<FibProduct> fib_product_chain(int n) {
    if (n < 2) raise(Errc::domain_error, "product chain requires n >= 2");
    std::vector<FibProduct> chain;
    for (int j : increasing_product_indices(n))
        chain.push_back({j, n - j, fib_nat(j) * fib_nat(n - j)});
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!(chain[i - 1].value < chain[i].value))
            raise(Errc::chain_violation,
                  "product chain not strictly increasing at index " + std::to_string(i));
    }
    return chain;
}

} // namespace hosoya
