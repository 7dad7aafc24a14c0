#pragma once

#include <set>
#include <string>

#include "duality/arith.hpp"
#include "duality/oracle.hpp"

namespace duality {

// reg2 ^= [reg1 divides n].
inline FunctionOracle divides_oracle(u64 n) {
    return {"divides(" + std::to_string(n) + ")",
            [n](u64 reg1) { return static_cast<u64>(divides_indicator(n, reg1)); }};
}

// reg2 ^= a^reg1 mod n.
inline FunctionOracle modexp_oracle(u64 a, u64 n) {
    return {"modexp(" + std::to_string(a) + "^x mod " + std::to_string(n) + ")",
            [a, n](u64 reg1) { return modexp(a, reg1, n); }};
}

// Keeps terms whose second register is 1 and first register is nonzero;
// flips everything else. Marks the nonzero multiples of the period.
inline SignOracle period_mark_oracle() {
    return {"period-mark", [](u64 reg1, u64 reg2) { return (reg2 == 1 && reg1 != 0) ? 1 : -1; }};
}

// Keeps terms whose second register is 1 and whose reg1 is not already in
// the foundlist; flips everything else, foundlist members included.
inline SignOracle divisor_mark_oracle(std::set<u64> foundlist) {
    return {"divisor-mark", [found = std::move(foundlist)](u64 reg1, u64 reg2) {
                return (reg2 == 1 && !found.contains(reg1)) ? 1 : -1;
            }};
}

// Keeps x iff x^2 - n is a perfect square.
inline SignOracle fermat_square_oracle(u64 n) {
    return {"fermat-square(" + std::to_string(n) + ")",
            [n](u64 reg1, u64 /*reg2*/) { return fermat_sign(reg1, n); }};
}

}  // namespace duality
