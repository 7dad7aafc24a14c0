#pragma once

#include <compare>
#include <cstdint>

#include "duality/arith.hpp"

namespace duality {

// Magnitudes below this are treated as exact zeros when waves are stored
// or recombined; two-path cancellation is exact in IEEE arithmetic and the
// threshold only absorbs floating-point dust from general coefficients.
inline constexpr double amplitude_prune_threshold = 1e-12;

// Tolerance for normalization checks (coefficient sums, norm assertions).
inline constexpr double norm_tolerance = 1e-9;

// One basis state of the two-register machine: |reg1>|reg2>.
struct BasisLabel {
    u64 reg1 = 0;
    u64 reg2 = 0;

    auto operator<=>(const BasisLabel&) const = default;
};

// Inclusive register ranges a state is defined over. reg2_max is 0 when
// the second register is unused.
struct RegisterSpec {
    u64 reg1_min = 0;
    u64 reg1_max = 0;
    u64 reg2_max = 0;

    bool operator==(const RegisterSpec&) const = default;

    bool valid() const { return reg1_min <= reg1_max; }

    // Number of reg1 basis values.
    u64 width() const { return reg1_max - reg1_min + 1; }

    bool contains(const BasisLabel& label) const {
        return label.reg1 >= reg1_min && label.reg1 <= reg1_max && label.reg2 <= reg2_max;
    }
};

}  // namespace duality
