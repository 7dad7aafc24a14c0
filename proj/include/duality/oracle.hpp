#pragma once

#include <functional>
#include <string>

#include "duality/basis.hpp"

namespace duality {

// Function-evaluation oracle: reg1 -> value XORed into reg2. Body must be
// pure (same input, same output); the gate set stays reversible.
struct FunctionOracle {
    std::string name;
    std::function<u64(u64)> body;
};

// Sign oracle: (reg1, reg2) -> +1 or -1 multiplied onto the amplitude.
struct SignOracle {
    std::string name;
    std::function<int(u64, u64)> body;
};

}  // namespace duality
