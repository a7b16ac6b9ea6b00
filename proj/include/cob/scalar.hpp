#pragma once

#include <map>
#include <string>
#include <vector>

#include "cob/bigint.hpp"
#include "cob/errors.hpp"

namespace cob {

// Reduced fraction of BigInts, denominator positive.
struct Rational {
    BigInt num = 0;
    BigInt den = 1;

    Rational() = default;
    Rational(BigInt n);  // NOLINT: implicit
    Rational(long long n) : Rational(BigInt(n)) {}
    Rational(BigInt n, BigInt d);

    bool is_zero() const { return num.is_zero(); }
    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;

    std::string to_string() const;
};

// Gaussian rational a + b*i.
struct GaussRat {
    Rational re;
    Rational im;

    GaussRat() = default;
    GaussRat(Rational r) : re(std::move(r)) {}  // NOLINT: implicit
    GaussRat(long long r) : re(Rational(r)) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussRat operator-() const { return {-re, -im}; }
    friend GaussRat operator+(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
    friend bool operator==(const GaussRat&, const GaussRat&) = default;

    std::string to_string() const;
};

// Exponent vector of a Laurent monomial in the formal symbols mu_0, mu_1, ...
using MonomialKey = std::map<std::int64_t, BigInt>;

// Exact scalar: finite sum of Gaussian-rational multiples of Laurent
// monomials in the mu symbols. Ring operations are total; division is
// defined for single-term divisors, which covers every localisation the
// field-theory formulas require.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) { *this = constant(GaussRat(v)); }  // NOLINT: implicit

    static Scalar constant(GaussRat c);
    static Scalar rational(Rational r) { return constant(GaussRat(std::move(r))); }
    static Scalar symbol(std::int64_t index, BigInt exponent = 1);
    static Scalar monomial(GaussRat coeff, MonomialKey key);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_single_term() const { return terms_.size() == 1; }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    // divisor must be a non-zero single term
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar&, const Scalar&) = default;

    Scalar inverse() const;               // single-term only
    Scalar pow(const BigInt& exp) const;  // negative exponents invert

    const std::map<MonomialKey, GaussRat>& terms() const { return terms_; }

    std::string to_string() const;

private:
    std::map<MonomialKey, GaussRat> terms_;
    void prune();
};

}  // namespace cob
