#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hosoya {

// Arbitrary-precision unsigned integer. All matching counts and Hosoya
// values in this library are BigNat; no floating point is used anywhere.
//
// Representation: base 2^64 limbs, little endian, no trailing zero limbs
// (zero is the empty limb vector).
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v);

    static BigNat from_decimal(std::string_view s); // throws Errc::parse_error

    bool is_zero() const { return limbs_.empty(); }
    std::size_t limb_count() const { return limbs_.size(); }

    // Value as uint64 if it fits.
    std::optional<std::uint64_t> to_uint64() const;

    std::string to_decimal() const;

    BigNat& operator+=(const BigNat& rhs);
    BigNat& operator-=(const BigNat& rhs); // throws Errc::domain_error on underflow
    BigNat& operator*=(const BigNat& rhs);

    friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }
    friend BigNat operator-(BigNat lhs, const BigNat& rhs) { return lhs -= rhs; }
    friend BigNat operator*(const BigNat& lhs, const BigNat& rhs);

    friend bool operator==(const BigNat&, const BigNat&) = default;
    friend std::strong_ordering operator<=>(const BigNat& lhs, const BigNat& rhs);

private:
    void trim();
    std::vector<std::uint64_t> limbs_;
};

// Arbitrary-precision signed integer (sign-magnitude over BigNat).
// Houses Fibonacci numbers at negative indices and signed identity sides.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    BigInt(BigNat mag, bool negative = false);

    static BigInt from_decimal(std::string_view s);

    bool is_zero() const { return mag_.is_zero(); }
    bool is_negative() const { return negative_; }
    const BigNat& magnitude() const { return mag_; }

    std::string to_decimal() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }

    friend bool operator==(const BigInt& lhs, const BigInt& rhs);
    friend std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs);

private:
    void normalize() {
        if (mag_.is_zero()) negative_ = false;
    }
    BigNat mag_;
    bool negative_ = false; // never set when mag_ is zero
};

} // namespace hosoya
