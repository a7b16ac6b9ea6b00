#include "doctest.h"

#include "cob/bigint.hpp"
#include "cob/verify.hpp"

using cob::BigInt;

TEST_CASE("bigint matches int64 arithmetic on random values") {
    cob::Rng rng(17);
    for (int i = 0; i < 2000; ++i) {
        long long a = static_cast<long long>(rng.next() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng.next() % 2000001) - 1000000;
        BigInt ba(a), bb(b);
        CHECK((ba + bb).to_int64() == a + b);
        CHECK((ba - bb).to_int64() == a - b);
        CHECK((ba * bb).to_int64() == a * b);
        if (b != 0) {
            CHECK((ba / bb).to_int64() == a / b);
            CHECK((ba % bb).to_int64() == a % b);
        }
        CHECK((ba < bb) == (a < b));
        CHECK((ba == bb) == (a == b));
    }
}

TEST_CASE("bigint survives values beyond 64 bits") {
    BigInt f = 1;
    for (long long i = 2; i <= 25; ++i) f *= i;
    CHECK(f.to_string() == "15511210043330985984000000");
    CHECK(!f.fits_int64());
    CHECK(BigInt::from_string("15511210043330985984000000") == f);
    CHECK((f / BigInt::from_string("1000000000000")).to_string() == "15511210043330");
    BigInt q, r;
    BigInt::divmod(f + 7, f, q, r);
    CHECK(q == 1);
    CHECK(r == 7);
}

TEST_CASE("bigint string and sign behaviour") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-42).to_string() == "-42");
    CHECK(BigInt::from_string("-0").to_string() == "0");
    CHECK((-BigInt(0)) == BigInt(0));
    CHECK(BigInt(-7) % BigInt(3) == BigInt(-1));  // sign follows the dividend
    CHECK(BigInt(-7) / BigInt(3) == BigInt(-2));
    CHECK_THROWS_AS(BigInt::from_string("12x"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
}

TEST_CASE("gcd and pow") {
    CHECK(cob::gcd(BigInt(12), BigInt(-18)) == 6);
    CHECK(cob::gcd(BigInt(0), BigInt(5)) == 5);
    CHECK(cob::pow(BigInt(3), 20).to_string() == "3486784401");
    CHECK(cob::pow(BigInt(10), 30).to_string() == "1000000000000000000000000000000");
}

TEST_CASE("int64 boundary") {
    BigInt max = BigInt::from_string("9223372036854775807");
    BigInt min = BigInt::from_string("-9223372036854775808");
    CHECK(max.fits_int64());
    CHECK(min.fits_int64());
    CHECK(!(max + 1).fits_int64());
    CHECK(!(min - 1).fits_int64());
    CHECK(max.to_int64() == 9223372036854775807ll);
    CHECK(min.to_int64() == std::numeric_limits<std::int64_t>::min());
}
