#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cob {

// Arbitrary-precision signed integer, sign-magnitude with base 10^9 limbs.
// All surface invariants (chi, theta, genus, crosscap counts) and the Smith
// normal form run over this type; no fixed-width arithmetic and no floating
// point anywhere in the engine.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design, literals everywhere
    explicit BigInt(const std::string& decimal);

    static BigInt from_string(const std::string& decimal);
    std::string to_string() const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    // Value tests and conversions for interop (JSON, loop bounds).
    bool fits_int64() const;
    std::int64_t to_int64() const;  // requires fits_int64()

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator/=(const BigInt& rhs);  // truncated toward zero
    BigInt& operator%=(const BigInt& rhs);  // sign follows dividend

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    static void divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

    std::size_t hash() const;

private:
    static constexpr std::uint32_t kBase = 1000000000u;

    // limbs_[0] is least significant; empty means zero; zero is never negative.
    std::vector<std::uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

BigInt gcd(BigInt a, BigInt b);
BigInt pow(const BigInt& base, std::uint64_t exp);

}  // namespace cob

template <>
struct std::hash<cob::BigInt> {
    std::size_t operator()(const cob::BigInt& v) const noexcept { return v.hash(); }
};
