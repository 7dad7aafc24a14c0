#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace duality {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Divisor indicator used by the naive factorization oracle: 1 iff i | n.
inline constexpr int divides_indicator(u64 n, u64 i) {
    if (i < 2) throw std::invalid_argument("divides_indicator requires i >= 2");
    return (n % i == 0) ? 1 : 0;
}

inline constexpr u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

// a^x mod n by square-and-multiply, O(log x) multiplications.
inline constexpr u64 modexp(u64 a, u64 x, u64 n) {
    if (n < 2) throw std::invalid_argument("modexp requires modulus >= 2");
    u64 result = 1 % n;
    u64 base = a % n;
    while (x > 0) {
        if (x & 1) result = mulmod(result, base, n);
        base = mulmod(base, base, n);
        x >>= 1;
    }
    return result;
}

inline constexpr int bit_width_u128(u128 v) {
    const u64 hi = static_cast<u64>(v >> 64);
    if (hi != 0) return 64 + std::bit_width(hi);
    return std::bit_width(static_cast<u64>(v));
}

// floor(sqrt(m)), exact integer Newton iteration. No floating point: a
// double sqrt misclassifies near-squares above 2^52.
inline constexpr u128 isqrt(u128 m) {
    if (m < 2) return m;
    u128 x = u128(1) << ((bit_width_u128(m) + 1) / 2);
    while (true) {
        const u128 y = (x + m / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

inline constexpr u64 isqrt(u64 m) { return static_cast<u64>(isqrt(static_cast<u128>(m))); }

inline constexpr bool is_perfect_square(u128 m) {
    const u128 r = isqrt(m);
    return r * r == m;
}

// Integer nearest to sqrt(n), half rounded up. Exact: the fractional part
// of sqrt(n) is >= 1/2 iff n - s^2 > s for s = floor(sqrt(n)).
inline constexpr u64 nearest_sqrt(u64 n) {
    const u64 s = isqrt(n);
    return (n - s * s > s) ? s + 1 : s;
}

inline constexpr u64 ceil_sqrt(u64 n) {
    const u64 s = isqrt(n);
    return (s * s == n) ? s : s + 1;
}

inline constexpr u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

// Sign query of the Fermat interference oracle: +1 iff x^2 - n is a
// perfect square, -1 otherwise. Requires x^2 >= n.
inline int fermat_sign(u64 x, u64 n) {
    const u128 sq = static_cast<u128>(x) * x;
    if (sq < n) throw std::domain_error("x below √N");
    return is_perfect_square(sq - n) ? 1 : -1;
}

// Deterministic Miller-Rabin, valid for all 64-bit n.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = modexp(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace duality
