#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "duality/oracle.hpp"
#include "duality/state.hpp"

namespace duality {

// Equal superposition over reg1 in [reg1_min, reg1_max] with reg2 fixed.
inline DualityState init_uniform(const RegisterSpec& spec, u64 reg2_value) {
    if (!spec.valid()) throw std::invalid_argument("empty register range");
    if (reg2_value > spec.reg2_max) throw std::invalid_argument("reg2 value outside register range");
    DualityState state(spec);
    const double amp = 1.0 / std::sqrt(static_cast<double>(spec.width()));
    for (u64 i = spec.reg1_min;; ++i) {
        state.append_term_hint({i, reg2_value}, amp);
        if (i == spec.reg1_max) break;
    }
    return state;
}

// Quantum wave divider: splits the wave into one sub-wave per coefficient,
// part i = coefficients[i] * state. Coefficients must sum to one so that
// recombining unmodified parts restores the input. Consumes the input.
inline SubWaveBundle divide(DualityState state, std::vector<Amplitude> coefficients) {
    if (coefficients.empty()) throw std::invalid_argument("divider coefficients must sum to one");
    Amplitude sum{0.0, 0.0};
    for (const Amplitude& c : coefficients) sum += c;
    if (std::abs(sum - Amplitude{1.0, 0.0}) > norm_tolerance) {
        throw std::invalid_argument("divider coefficients must sum to one");
    }
    SubWaveBundle bundle;
    bundle.parts.reserve(coefficients.size());
    for (std::size_t i = 0; i + 1 < coefficients.size(); ++i) {
        DualityState part = state;
        part.scale(coefficients[i]);
        bundle.parts.push_back(std::move(part));
    }
    state.scale(coefficients.back());
    bundle.parts.push_back(std::move(state));
    bundle.coefficients = std::move(coefficients);
    return bundle;
}

// Applies a function-evaluation oracle: |i>|r> -> |i>|r XOR body(i)>.
// Amplitudes are untouched, so the norm is preserved exactly.
inline DualityState apply_function(DualityState state, const FunctionOracle& oracle) {
    DualityState result(state.spec());
    for (const auto& [label, amp] : state.terms()) {
        u64 value = 0;
        try {
            value = oracle.body(label.reg1);
        } catch (const std::exception& e) {
            throw std::runtime_error("oracle evaluation failed at basis value " +
                                     std::to_string(label.reg1) + ": " + e.what());
        }
        const BasisLabel target{label.reg1, label.reg2 ^ value};
        if (!state.spec().contains(target)) {
            throw std::runtime_error("oracle evaluation failed at basis value " +
                                     std::to_string(label.reg1) + ": result outside register range");
        }
        result.append_term_hint(target, amp);
    }
    return result;
}

// Applies a sign oracle: amplitude of |i>|r> multiplied by body(i, r).
inline DualityState apply_sign(DualityState state, const SignOracle& oracle) {
    DualityState result(state.spec());
    for (const auto& [label, amp] : state.terms()) {
        const int sign = oracle.body(label.reg1, label.reg2);
        if (sign != 1 && sign != -1) throw std::domain_error("sign oracle must return ±1");
        result.append_term_hint(label, sign == 1 ? amp : -amp);
    }
    return result;
}

// Quantum wave combiner: elementwise amplitude sum of all sub-waves.
// Oppositely signed terms cancel; the result may be sub-normalized or zero.
inline DualityState combine(SubWaveBundle bundle) {
    if (bundle.parts.empty()) throw std::invalid_argument("incompatible sub-waves");
    const RegisterSpec spec = bundle.parts.front().spec();
    for (const DualityState& part : bundle.parts) {
        if (!(part.spec() == spec)) throw std::invalid_argument("incompatible sub-waves");
    }
    DualityState result = std::move(bundle.parts.front());
    for (std::size_t i = 1; i < bundle.parts.size(); ++i) {
        for (const auto& [label, amp] : bundle.parts[i].terms()) {
            result.accumulate(label, amp);
        }
    }
    return result;
}

struct ReadoutResult {
    std::optional<BasisLabel> outcome;
    double success_probability = 0.0;
};

// 53-bit uniform draw in [0, 1).
inline double canonical_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Read-out measurement. An empty (fully cancelled) wave reads out nothing
// with success probability 0. Otherwise one label is sampled with
// probability |amp|^2 / norm^2, the ideal readout over the surviving
// support, while success_probability reports min(norm^2, 1) so the
// amplitude lost at the combiner stays inspectable.
inline ReadoutResult readout(const DualityState& state, std::mt19937_64& rng) {
    const double total = state.norm_sq();
    if (total <= amplitude_prune_threshold) return {std::nullopt, 0.0};
    const double target = canonical_draw(rng) * total;
    double cumulative = 0.0;
    const auto& terms = state.terms();
    for (const auto& [label, amp] : terms) {
        cumulative += std::norm(amp);
        if (cumulative > target) return {label, std::min(total, 1.0)};
    }
    return {terms.rbegin()->first, std::min(total, 1.0)};
}

inline ReadoutResult readout(const DualityState& state, u64 seed) {
    std::mt19937_64 rng(seed);
    return readout(state, rng);
}

}  // namespace duality
