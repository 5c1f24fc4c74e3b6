#pragma once

#include "hosoya/bignum.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hosoya {

// Largest |index| accepted by fib(). Fast doubling handles far more, but the
// library promises exactness inside a stated window.
inline constexpr std::int64_t kMaxFibIndex = 1'000'000;

// F(0)=0, F(1)=1, F(n)=F(n-1)+F(n-2); n must be >= 0 here.
BigNat fib_nat(std::int64_t n);

// Fibonacci at any signed index, extended by F(-n) = (-1)^(n+1) F(n).
// Throws Errc::out_of_range beyond kMaxFibIndex.
BigInt fib(std::int64_t n);

// F(n) == F(k)F(n-k+1) + F(k-1)F(n-k), evaluated exactly.
// Requires 1 <= k <= n, else Errc::domain_error.
bool check_splitting_identity(std::int64_t n, std::int64_t k);

// F(m)F(n+1) - F(n)F(m+1) == (-1)^n F(m-n), any signed m, n.
bool check_cassini_like(std::int64_t m, std::int64_t n);

// The index order j0, j1, ... over representatives j in [0, sum/2] that makes
// the products F(j) * F(sum - j) strictly increasing: even j ascending, then
// odd j descending. Shared by every interleaved-chain verification.
std::vector<int> increasing_product_indices(int sum);

struct FibProduct {
    int lo;       // j
    int hi;       // n - j
    BigNat value; // F(j) * F(n-j)
};

// Products F(j)F(n-j) in increasing order; throws Errc::chain_violation if
// the computed sequence is not strictly increasing (would be a bug) and
// Errc::domain_error for n < 2.
std::vector<FibProduct> fib_product_chain(int n);

} // namespace hosoya
