#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "duality/arith.hpp"

using namespace duality;

namespace {

// Brute-force reference: a^x mod n by repeated multiplication.
u64 modexp_bruteforce(u64 a, u64 x, u64 n) {
    u64 result = 1 % n;
    for (u64 i = 0; i < x; ++i) result = (result * (a % n)) % n;
    return result;
}

// Reference perfect-square check: scan y upward.
bool square_by_scan(u64 m) {
    for (u64 y = 0; y * y <= m; ++y) {
        if (y * y == m) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("divides_indicator examples") {
    CHECK(divides_indicator(15, 3) == 1);
    CHECK(divides_indicator(15, 4) == 0);
    for (u64 n : {2ull, 5ull, 21ull, 360ull}) CHECK(divides_indicator(n, n) == 1);
    CHECK_THROWS_AS(divides_indicator(10, 1), std::invalid_argument);
}

TEST_CASE("modexp examples") {
    CHECK(modexp(2, 5, 21) == 11);
    CHECK(modexp(2, 0, 21) == 1);
    CHECK(modexp(2, 6, 21) == 1);
}

TEST_CASE("modexp matches brute force on small inputs") {
    for (u64 a = 0; a <= 64; ++a) {
        for (u64 n = 2; n <= 64; ++n) {
            u64 running = 1 % n;
            CHECK(modexp(a, 0, n) == running);
            for (u64 x = 1; x <= 40; ++x) {
                running = (running * (a % n)) % n;
                REQUIRE(modexp(a, x, n) == running);
            }
        }
    }
}

TEST_CASE("modexp matches brute force on random inputs up to 2^10") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<u64> dist(0, 1024);
    for (int i = 0; i < 20000; ++i) {
        const u64 a = dist(rng) + 2;
        const u64 x = dist(rng);
        const u64 n = dist(rng) + 2;
        REQUIRE(modexp(a, x, n) == modexp_bruteforce(a, x, n));
    }
}

TEST_CASE("isqrt examples") {
    CHECK(isqrt(u64{4}) == 2);
    CHECK(isqrt(u64{24}) == 4);
    CHECK(isqrt(u64{0}) == 0);
}

TEST_CASE("isqrt bracketing property") {
    for (u64 m = 0; m <= 1000000; ++m) {
        const u64 r = isqrt(m);
        REQUIRE(r * r <= m);
        REQUIRE((r + 1) * (r + 1) > m);
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        const u64 m = rng();
        const u128 r = isqrt(static_cast<u128>(m));
        REQUIRE(r * r <= m);
        REQUIRE((r + 1) * (r + 1) > m);
    }
}

TEST_CASE("nearest and ceil square roots") {
    CHECK(nearest_sqrt(4) == 2);
    CHECK(nearest_sqrt(8) == 3);   // sqrt(8) = 2.83
    CHECK(nearest_sqrt(15) == 4);  // sqrt(15) = 3.87
    CHECK(nearest_sqrt(21) == 5);  // sqrt(21) = 4.58
    CHECK(nearest_sqrt(6) == 2);   // sqrt(6) = 2.45
    CHECK(ceil_sqrt(9) == 3);
    CHECK(ceil_sqrt(10) == 4);
    CHECK(ceil_sqrt(21) == 5);
}

TEST_CASE("fermat_sign examples") {
    CHECK(fermat_sign(5, 21) == 1);   // 25 - 21 = 4 = 2^2
    CHECK(fermat_sign(6, 21) == -1);  // 36 - 21 = 15
    for (u64 x : {2ull, 3ull, 9ull, 31ull}) CHECK(fermat_sign(x, x * x) == 1);
    CHECK_THROWS_AS(fermat_sign(4, 21), std::domain_error);
}

TEST_CASE("fermat_sign agrees with y-scan") {
    for (u64 n = 9; n <= 401; n += 2) {
        for (u64 x = ceil_sqrt(n); x <= n / 2 + 1; ++x) {
            const bool expected = square_by_scan(x * x - n);
            REQUIRE(fermat_sign(x, n) == (expected ? 1 : -1));
        }
    }
}

TEST_CASE("gcd examples") {
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(17, 0) == 17);
    CHECK(gcd(0, 17) == 17);
    CHECK(gcd(6, 510) == 6);
    CHECK(gcd(0, 0) == 0);
}

TEST_CASE("is_prime agrees with trial scan") {
    auto prime_by_scan = [](u64 n) {
        if (n < 2) return false;
        for (u64 d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    };
    for (u64 n = 0; n <= 20000; ++n) REQUIRE(is_prime(n) == prime_by_scan(n));
    CHECK(is_prime(2305843009213693951ull));   // 2^61 - 1, Mersenne prime
    CHECK_FALSE(is_prime(2305843009213693953ull));
}
