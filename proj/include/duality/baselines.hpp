#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "duality/arith.hpp"

namespace duality {

// Independent brute-force references used as test oracles and CLI
// comparison targets. None of these call into the wave algorithms.

enum class BaselineMethod { trial_division, classical_fermat, order_scan };

struct TrialDivisionResult {
    std::vector<u64> factors;  // prime factors with multiplicity, ascending
    u64 steps = 0;             // candidate divisors examined, plus the residual prime
};

inline TrialDivisionResult trial_division(u64 n) {
    if (n < 2) throw std::invalid_argument("input too small");
    TrialDivisionResult result;
    u64 rest = n;
    for (u64 d = 2; static_cast<u128>(d) * d <= rest; ++d) {
        ++result.steps;
        while (rest % d == 0) {
            result.factors.push_back(d);
            rest /= d;
        }
    }
    if (rest > 1) {
        ++result.steps;
        result.factors.push_back(rest);
    }
    return result;
}

struct ClassicalFermatResult {
    std::optional<std::pair<u64, u64>> factors;  // (X+Y, X-Y); empty = prime or no representation
    u64 steps = 0;                               // x values tried
};

// Ascending scan for X with X^2 - n a perfect square, X in
// [ceil(sqrt(n)), floor(n/2)].
inline ClassicalFermatResult classical_fermat(u64 n) {
    if (n % 2 == 0) throw std::invalid_argument("Fermat method requires odd input");
    if (n < 9) throw std::invalid_argument("input too small");
    ClassicalFermatResult result;
    for (u64 x = ceil_sqrt(n); x <= n / 2; ++x) {
        ++result.steps;
        const u128 diff = static_cast<u128>(x) * x - n;
        if (is_perfect_square(diff)) {
            const u64 y = static_cast<u64>(isqrt(diff));
            result.factors = {{x + y, x - y}};
            return result;
        }
    }
    return result;  // scan exhausted: prime or no representation
}

// Smallest r >= 1 with a^r = 1 (mod n), by incremental multiplication.
inline u64 order_bruteforce(u64 a, u64 n) {
    if (a < 2) throw std::invalid_argument("order_bruteforce requires a >= 2");
    if (n < 3) throw std::invalid_argument("order_bruteforce requires n >= 3");
    if (gcd(a, n) != 1) throw std::invalid_argument("order_bruteforce requires gcd(a, n) = 1");
    u64 value = a % n;
    u64 r = 1;
    while (value != 1) {
        value = mulmod(value, a % n, n);
        ++r;
    }
    return r;
}

// Common reporting shape for the baselines.
struct BaselineReport {
    BaselineMethod method = BaselineMethod::trial_division;
    std::vector<u64> factors;   // empty for classical_fermat when no representation exists
    std::optional<u64> period;  // order_scan only
    u64 steps = 0;
};

inline BaselineReport report_trial_division(u64 n) {
    const TrialDivisionResult result = trial_division(n);
    return {BaselineMethod::trial_division, result.factors, std::nullopt, result.steps};
}

inline BaselineReport report_classical_fermat(u64 n) {
    const ClassicalFermatResult result = classical_fermat(n);
    BaselineReport report{BaselineMethod::classical_fermat, {}, std::nullopt, result.steps};
    if (result.factors) {
        report.factors = {std::min(result.factors->first, result.factors->second),
                          std::max(result.factors->first, result.factors->second)};
    }
    return report;
}

inline BaselineReport report_order_scan(u64 a, u64 n) {
    const u64 r = order_bruteforce(a, n);
    return {BaselineMethod::order_scan, {}, r, r};  // one multiplication per step
}

}  // namespace duality
