#include "cob/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace cob {

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    unsigned long long mag = negative_ ? 0ull - static_cast<unsigned long long>(v)
                                       : static_cast<unsigned long long>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
        mag /= kBase;
    }
}

BigInt::BigInt(const std::string& decimal) { *this = from_string(decimal); }

BigInt BigInt::from_string(const std::string& decimal) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < decimal.size() && (decimal[pos] == '-' || decimal[pos] == '+')) {
        neg = decimal[pos] == '-';
        ++pos;
    }
    if (pos == decimal.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt out;
    for (std::size_t i = pos; i < decimal.size(); ++i) {
        if (decimal[i] < '0' || decimal[i] > '9')
            throw std::invalid_argument("BigInt: bad digit in '" + decimal + "'");
    }
    // consume 9 decimal digits per limb, most significant chunk first
    std::size_t n = decimal.size() - pos;
    std::size_t head = n % 9;
    std::size_t i = pos;
    auto push_chunk = [&out](std::uint32_t chunk) {
        // out = out * 10^9 + chunk
        std::uint64_t carry = chunk;
        for (auto& limb : out.limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * kBase + carry;
            limb = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry != 0) {
            out.limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
    };
    if (head != 0) {
        std::uint32_t chunk = 0;
        for (std::size_t k = 0; k < head; ++k) chunk = chunk * 10 + (decimal[i++] - '0');
        push_chunk(chunk);
    }
    while (i < decimal.size()) {
        std::uint32_t chunk = 0;
        for (std::size_t k = 0; k < 9; ++k) chunk = chunk * 10 + (decimal[i++] - '0');
        push_chunk(chunk);
    }
    out.trim();
    out.negative_ = neg && !out.limbs_.empty();
    return out;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    std::string s = negative_ ? "-" : "";
    s += std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 3) return false;
    // |v| < 2^63 <=> compare against 9223372036854775808
    static const BigInt kLimit = BigInt::from_string("9223372036854775808");
    int c = cmp_mag(limbs_, kLimit.limbs_);
    if (c < 0) return true;
    return c == 0 && negative_;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
    unsigned long long mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = mag * kBase + limbs_[i];
    return negative_ ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.limbs_.empty()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint32_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        carry = sum >= kBase ? 1 : 0;
        out.push_back(sum >= kBase ? sum - kBase : sum);
    }
    if (carry) out.push_back(carry);
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(cur));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        limbs_ = add_mag(limbs_, rhs.limbs_);
    } else {
        int c = cmp_mag(limbs_, rhs.limbs_);
        if (c == 0) {
            limbs_.clear();
            negative_ = false;
        } else if (c > 0) {
            limbs_ = sub_mag(limbs_, rhs.limbs_);
        } else {
            limbs_ = sub_mag(rhs.limbs_, limbs_);
            negative_ = rhs.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (limbs_.empty() || rhs.limbs_.empty()) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size() || carry != 0; ++j) {
            std::uint64_t cur = out[i + j] + carry;
            if (j < rhs.limbs_.size())
                cur += static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j];
            out[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    limbs_ = std::move(out);
    negative_ = negative_ != rhs.negative_;
    trim();
    return *this;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
    if (den.limbs_.empty()) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(num.limbs_, den.limbs_);
    if (c < 0) {
        quot = BigInt();
        rem = num;
        return;
    }
    // schoolbook long division over base-10^9 digits, most significant first
    BigInt q, r;
    q.limbs_.assign(num.limbs_.size(), 0);
    const BigInt den_abs = den.abs();
    for (std::size_t i = num.limbs_.size(); i-- > 0;) {
        // r = r * base + num.limbs_[i]
        r.limbs_.insert(r.limbs_.begin(), num.limbs_[i]);
        r.trim();
        // binary search the digit d with d*den_abs <= r < (d+1)*den_abs
        std::uint32_t lo = 0, hi = kBase - 1, d = 0;
        while (lo <= hi) {
            std::uint32_t mid = lo + (hi - lo) / 2;
            BigInt t = den_abs * BigInt(static_cast<long long>(mid));
            if (cmp_mag(t.limbs_, r.limbs_) <= 0) {
                d = mid;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        if (d != 0) {
            r.limbs_ = sub_mag(r.limbs_, (den_abs * BigInt(static_cast<long long>(d))).limbs_);
            r.trim();
        }
        q.limbs_[i] = d;
    }
    q.trim();
    q.negative_ = !q.limbs_.empty() && (num.negative_ != den.negative_);
    r.negative_ = !r.limbs_.empty() && num.negative_;
    quot = std::move(q);
    rem = std::move(r);
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return *this = std::move(q);
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return *this = std::move(r);
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_)
        return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    if (a.negative_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

std::size_t BigInt::hash() const {
    std::size_t h = negative_ ? 0x9e3779b97f4a7c15ull : 0;
    for (std::uint32_t limb : limbs_) h = h * 1000003u + limb;
    return h;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt pow(const BigInt& base, std::uint64_t exp) {
    BigInt out = 1, acc = base;
    while (exp != 0) {
        if (exp & 1) out *= acc;
        exp >>= 1;
        if (exp != 0) acc *= acc;
    }
    return out;
}

}  // namespace cob
