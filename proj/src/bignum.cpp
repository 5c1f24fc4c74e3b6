#include "hosoya/bignum.hpp"

#include "hosoya/error.hpp"

#include <algorithm>
#include <cctype>

namespace hosoya {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigNat::BigNat(u64 v) {
    if (v != 0) limbs_.push_back(v);
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::optional<u64> BigNat::to_uint64() const {
    if (limbs_.empty()) return 0;
    if (limbs_.size() == 1) return limbs_[0];
    return std::nullopt;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
    const auto& a = limbs_;
    const auto& b = rhs.limbs_;
    std::size_t n = std::max(a.size(), b.size());
    limbs_.resize(n, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        u128 sum = (u128)limbs_[i] + (i < b.size() ? b[i] : 0) + carry;
        limbs_[i] = (u64)sum;
        carry = (u64)(sum >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
    if (*this < rhs) raise(Errc::domain_error, "BigNat subtraction underflow");
    u64 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 need = (u128)(i < rhs.limbs_.size() ? rhs.limbs_[i] : 0) + borrow;
        u128 cur = limbs_[i];
        borrow = cur < need ? 1 : 0;
        limbs_[i] = (u64)(cur - need);
    }
    trim();
    return *this;
}

BigNat operator*(const BigNat& lhs, const BigNat& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return BigNat();
    const auto& a = lhs.limbs_;
    const auto& b = rhs.limbs_;
    BigNat out;
    out.limbs_.assign(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            u128 cur = (u128)a[i] * b[j] + out.limbs_[i + j] + carry;
            out.limbs_[i + j] = (u64)cur;
            carry = (u64)(cur >> 64);
        }
        out.limbs_[i + b.size()] += carry;
    }
    out.trim();
    return out;
}

BigNat& BigNat::operator*=(const BigNat& rhs) {
    *this = *this * rhs;
    return *this;
}

std::strong_ordering operator<=>(const BigNat& lhs, const BigNat& rhs) {
    if (lhs.limbs_.size() != rhs.limbs_.size())
        return lhs.limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
        if (lhs.limbs_[i] != rhs.limbs_[i]) return lhs.limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

namespace {

// Divide by a single u64 in place; returns the remainder.
u64 divmod_small(std::vector<u64>& limbs, u64 divisor) {
    u128 rem = 0;
    for (std::size_t i = limbs.size(); i-- > 0;) {
        u128 cur = (rem << 64) | limbs[i];
        limbs[i] = (u64)(cur / divisor);
        rem = cur % divisor;
    }
    while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
    return (u64)rem;
}

constexpr u64 kDecChunk = 10'000'000'000'000'000'000ull; // 10^19
constexpr int kDecChunkDigits = 19;

} // namespace

std::string BigNat::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<u64> work = limbs_;
    std::vector<u64> chunks;
    while (!work.empty()) chunks.push_back(divmod_small(work, kDecChunk));
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(kDecChunkDigits - part.size(), '0') + part;
    }
    return out;
}

BigNat BigNat::from_decimal(std::string_view s) {
    if (s.empty()) raise(Errc::parse_error, "empty decimal literal");
    BigNat out;
    BigNat ten(10);
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            raise(Errc::parse_error, "invalid decimal digit");
        out = out * ten + BigNat((u64)(c - '0'));
    }
    return out;
}

BigInt::BigInt(std::int64_t v) {
    if (v < 0) {
        negative_ = true;
        mag_ = BigNat((u64)(-(v + 1)) + 1); // avoids INT64_MIN overflow
    } else {
        mag_ = BigNat((u64)v);
    }
}

BigInt::BigInt(BigNat mag, bool negative) : mag_(std::move(mag)), negative_(negative) {
    normalize();
}

BigInt BigInt::from_decimal(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    return BigInt(BigNat::from_decimal(s), neg);
}

std::string BigInt::to_decimal() const {
    if (negative_) return "-" + mag_.to_decimal();
    return mag_.to_decimal();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.mag_.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        mag_ += rhs.mag_;
    } else if (mag_ >= rhs.mag_) {
        mag_ -= rhs.mag_;
    } else {
        mag_ = rhs.mag_ - mag_;
        negative_ = rhs.negative_;
    }
    normalize();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    return *this += -rhs;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    mag_ *= rhs.mag_;
    negative_ = negative_ != rhs.negative_;
    normalize();
    return *this;
}

bool operator==(const BigInt& lhs, const BigInt& rhs) {
    return lhs.negative_ == rhs.negative_ && lhs.mag_ == rhs.mag_;
}

std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs) {
    if (lhs.negative_ != rhs.negative_)
        return lhs.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    auto mag_cmp = lhs.mag_ <=> rhs.mag_;
    if (!lhs.negative_) return mag_cmp;
    if (mag_cmp == std::strong_ordering::less) return std::strong_ordering::greater;
    if (mag_cmp == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::loop_edge: return "loop edge";
        case Errc::vertex_out_of_range: return "vertex out of range";
        case Errc::duplicate_edge: return "duplicate edge";
        case Errc::edge_not_present: return "edge not present";
        case Errc::not_unicyclic: return "not unicyclic";
        case Errc::not_a_forest: return "not a forest";
        case Errc::not_a_tree: return "not a tree";
        case Errc::too_large: return "too large";
        case Errc::domain_error: return "domain error";
        case Errc::invalid_parameters: return "invalid parameters";
        case Errc::no_closed_form: return "no closed form";
        case Errc::chain_violation: return "chain violation";
        case Errc::malformed_triple: return "malformed triple";
        case Errc::out_of_range: return "out of range";
        case Errc::parse_error: return "parse error";
    }
    return "unknown";
}

} // namespace hosoya
