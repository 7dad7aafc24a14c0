#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "duality/core.hpp"
#include "duality/oracles.hpp"

using namespace duality;

namespace {

// Random sparse state over the given spec with term_count distinct labels.
DualityState random_state(const RegisterSpec& spec, std::size_t term_count, std::mt19937_64& rng,
                          bool normalize = true) {
    DualityState state(spec);
    std::uniform_int_distribution<u64> reg1_dist(spec.reg1_min, spec.reg1_max);
    std::uniform_int_distribution<u64> reg2_dist(0, spec.reg2_max);
    std::uniform_real_distribution<double> amp_dist(-1.0, 1.0);
    std::set<BasisLabel> used;
    while (used.size() < term_count) {
        const BasisLabel label{reg1_dist(rng), reg2_dist(rng)};
        if (!used.insert(label).second) continue;
        state.set_amplitude(label, {amp_dist(rng), amp_dist(rng)});
    }
    if (normalize && state.norm_sq() > 0) state.scale(1.0 / std::sqrt(state.norm_sq()));
    return state;
}

// The post-combine period-finding wave for n=21, a=2, q=512.
DualityState worked_example_wave() {
    DualityState state = init_uniform({0, 511, 20}, 0);
    state = apply_function(std::move(state), modexp_oracle(2, 21));
    SubWaveBundle bundle = divide(std::move(state), {0.5, 0.5});
    bundle.parts[1] = apply_sign(std::move(bundle.parts[1]), period_mark_oracle());
    return combine(std::move(bundle));
}

}  // namespace

TEST_CASE("init_uniform spreads amplitude evenly") {
    const DualityState small = init_uniform({2, 5, 0}, 0);
    REQUIRE(small.term_count() == 4);
    for (u64 i = 2; i <= 5; ++i) {
        CHECK(small.amplitude({i, 0}).real() == Catch::Approx(0.5).margin(1e-12));
        CHECK(small.amplitude({i, 0}).imag() == 0.0);
    }
    CHECK(small.norm_sq() == Catch::Approx(1.0).margin(1e-9));

    const DualityState wide = init_uniform({0, 511, 0}, 0);
    REQUIRE(wide.term_count() == 512);
    CHECK(wide.amplitude({100, 0}).real() == Catch::Approx(1.0 / std::sqrt(512.0)).margin(1e-12));
    CHECK(wide.norm_sq() == Catch::Approx(1.0).margin(1e-9));

    const DualityState single = init_uniform({7, 7, 0}, 0);
    REQUIRE(single.term_count() == 1);
    CHECK(single.amplitude({7, 0}).real() == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("init_uniform rejects an empty range") {
    CHECK_THROWS_WITH(init_uniform({5, 4, 0}, 0), "empty register range");
    CHECK_THROWS_AS(init_uniform({0, 3, 0}, 1), std::invalid_argument);  // reg2 out of range
}

TEST_CASE("divide scales each part by its coefficient") {
    std::mt19937_64 rng(1);
    const DualityState original = random_state({0, 63, 1}, 20, rng);
    const SubWaveBundle bundle = divide(original, {0.5, 0.5});
    REQUIRE(bundle.parts.size() == 2);
    for (const DualityState& part : bundle.parts) {
        REQUIRE(part.term_count() == original.term_count());
        for (const auto& [label, amp] : original.terms()) {
            CHECK(std::abs(part.amplitude(label) - 0.5 * amp) < 1e-12);
        }
        CHECK(part.norm_sq() == Catch::Approx(0.25 * original.norm_sq()).margin(1e-9));
    }

    const SubWaveBundle zero_bundle = divide(DualityState({0, 63, 1}), {0.5, 0.5});
    CHECK(zero_bundle.parts[0].is_zero());
    CHECK(zero_bundle.parts[1].is_zero());
}

TEST_CASE("divide validates coefficients") {
    const DualityState state = init_uniform({0, 3, 0}, 0);
    CHECK_THROWS_WITH(divide(state, {0.5, 0.25}), "divider coefficients must sum to one");
    CHECK_THROWS_WITH(divide(state, {}), "divider coefficients must sum to one");
    CHECK_NOTHROW(divide(state, {{0.5, 0.25}, {0.5, -0.25}}));  // complex coefficients allowed
}

TEST_CASE("apply_function stores the oracle value in the second register") {
    DualityState state(RegisterSpec{0, 511, 20});
    state.set_amplitude({5, 0}, 1.0);
    state.set_amplitude({0, 0}, 0.5);
    const DualityState mapped = apply_function(state, modexp_oracle(2, 21));
    CHECK(std::abs(mapped.amplitude({5, 11}) - Amplitude{1.0, 0.0}) < 1e-12);  // 2^5 mod 21 = 11
    CHECK(std::abs(mapped.amplitude({0, 1}) - Amplitude{0.5, 0.0}) < 1e-12);   // 2^0 mod 21 = 1
    CHECK(mapped.amplitude({5, 0}) == Amplitude{0.0, 0.0});
    CHECK(mapped.norm_sq() == Catch::Approx(state.norm_sq()).margin(1e-12));
}

TEST_CASE("apply_function with zero body is the identity") {
    std::mt19937_64 rng(2);
    const DualityState state = random_state({0, 100, 7}, 40, rng);
    const FunctionOracle zero{"zero", [](u64) { return u64{0}; }};
    const DualityState mapped = apply_function(state, zero);
    REQUIRE(mapped.terms() == state.terms());
}

TEST_CASE("apply_function is an involution under XOR semantics") {
    std::mt19937_64 rng(3);
    const DualityState state = random_state({0, 127, 63}, 50, rng);
    const FunctionOracle oracle{"mix", [](u64 reg1) { return (reg1 * 37 + 11) % 64; }};
    const DualityState twice = apply_function(apply_function(state, oracle), oracle);
    REQUIRE(twice.terms() == state.terms());
}

TEST_CASE("apply_function wraps oracle failures") {
    DualityState state(RegisterSpec{0, 7, 1});
    state.set_amplitude({3, 0}, 1.0);
    const FunctionOracle throwing{"bad", [](u64) -> u64 { throw std::runtime_error("boom"); }};
    CHECK_THROWS_WITH(apply_function(state, throwing),
                      Catch::Matchers::ContainsSubstring("oracle evaluation failed at basis value 3"));
    const FunctionOracle oversized{"big", [](u64) { return u64{9}; }};
    CHECK_THROWS_WITH(apply_function(state, oversized),
                      Catch::Matchers::ContainsSubstring("oracle evaluation failed at basis value 3"));
}

TEST_CASE("apply_sign follows the period-mark rule") {
    DualityState state(RegisterSpec{0, 511, 20});
    state.set_amplitude({6, 1}, 0.25);
    state.set_amplitude({0, 1}, 0.25);
    state.set_amplitude({7, 2}, 0.25);
    const DualityState marked = apply_sign(state, period_mark_oracle());
    CHECK(std::abs(marked.amplitude({6, 1}) - Amplitude{0.25, 0.0}) < 1e-12);   // kept
    CHECK(std::abs(marked.amplitude({0, 1}) - Amplitude{-0.25, 0.0}) < 1e-12);  // reg1 = 0 flipped
    CHECK(std::abs(marked.amplitude({7, 2}) - Amplitude{-0.25, 0.0}) < 1e-12);  // reg2 != 1 flipped
    CHECK(marked.norm_sq() == Catch::Approx(state.norm_sq()).margin(1e-12));
}

TEST_CASE("apply_sign identity and validation") {
    std::mt19937_64 rng(4);
    const DualityState state = random_state({0, 200, 3}, 60, rng);
    const SignOracle keep_all{"keep", [](u64, u64) { return 1; }};
    REQUIRE(apply_sign(state, keep_all).terms() == state.terms());

    const SignOracle invalid{"invalid", [](u64, u64) { return 0; }};
    CHECK_THROWS_WITH(apply_sign(state, invalid), "sign oracle must return ±1");
}

TEST_CASE("combine undoes divide when parts are untouched") {
    std::mt19937_64 rng(5);
    const DualityState original = random_state({0, 300, 5}, 80, rng);
    const DualityState roundtrip = combine(divide(original, {0.5, 0.5}));
    REQUIRE(roundtrip.term_count() == original.term_count());
    for (const auto& [label, amp] : original.terms()) {
        CHECK(std::abs(roundtrip.amplitude(label) - amp) < 1e-9);
    }
}

TEST_CASE("combine cancels opposite parts to the zero state") {
    std::mt19937_64 rng(6);
    const DualityState original = random_state({0, 50, 0}, 30, rng);
    SubWaveBundle bundle = divide(original, {0.5, 0.5});
    const SignOracle flip_all{"flip", [](u64, u64) { return -1; }};
    bundle.parts[1] = apply_sign(std::move(bundle.parts[1]), flip_all);
    const DualityState combined = combine(std::move(bundle));
    CHECK(combined.is_zero());
    CHECK(combined.norm_sq() == 0.0);
}

TEST_CASE("combine rejects mismatched register specs") {
    SubWaveBundle bundle;
    bundle.parts.emplace_back(RegisterSpec{0, 3, 0});
    bundle.parts.emplace_back(RegisterSpec{0, 4, 0});
    bundle.coefficients = {0.5, 0.5};
    CHECK_THROWS_WITH(combine(std::move(bundle)), "incompatible sub-waves");
}

TEST_CASE("worked example wave survives on multiples of six") {
    const DualityState wave = worked_example_wave();
    REQUIRE(wave.term_count() == 85);
    CHECK(wave.norm_sq() == Catch::Approx(85.0 / 512.0).margin(1e-9));
    const double expected_amp = 1.0 / std::sqrt(512.0);
    for (u64 k = 1; k <= 85; ++k) {
        const Amplitude amp = wave.amplitude({6 * k, 1});
        REQUIRE(std::abs(amp - Amplitude{expected_amp, 0.0}) < 1e-12);
    }
    const std::vector<BasisLabel> support = wave.support();
    CHECK(support.front() == BasisLabel{6, 1});
    CHECK(support.back() == BasisLabel{510, 1});
}

TEST_CASE("norm_sq and support basics") {
    const DualityState zero(RegisterSpec{0, 9, 0});
    CHECK(zero.norm_sq() == 0.0);
    CHECK(zero.support().empty());

    const DualityState uniform = init_uniform({0, 511, 0}, 0);
    CHECK(uniform.norm_sq() == Catch::Approx(1.0).margin(1e-9));
    CHECK(uniform.support().size() == 512);
}

TEST_CASE("readout of the zero state finds nothing") {
    const DualityState zero(RegisterSpec{0, 9, 0});
    const ReadoutResult result = readout(zero, u64{3});
    CHECK_FALSE(result.outcome.has_value());
    CHECK(result.success_probability == 0.0);
}

TEST_CASE("readout of a single sub-normalized term") {
    DualityState state(RegisterSpec{0, 9, 0});
    state.set_amplitude({3, 0}, 0.4);
    const ReadoutResult result = readout(state, u64{11});
    REQUIRE(result.outcome.has_value());
    CHECK(*result.outcome == BasisLabel{3, 0});
    CHECK(result.success_probability == Catch::Approx(0.16).margin(1e-12));
}

TEST_CASE("readout is deterministic per seed") {
    const DualityState wave = worked_example_wave();
    for (u64 seed = 0; seed < 32; ++seed) {
        const ReadoutResult a = readout(wave, seed);
        const ReadoutResult b = readout(wave, seed);
        REQUIRE(a.outcome == b.outcome);
        REQUIRE(a.success_probability == b.success_probability);
    }
}

TEST_CASE("readout over the worked example wave is uniform") {
    const DualityState wave = worked_example_wave();
    std::mt19937_64 rng(99);
    std::map<u64, int> counts;
    const int samples = 20000;
    for (int i = 0; i < samples; ++i) {
        const ReadoutResult result = readout(wave, rng);
        REQUIRE(result.outcome.has_value());
        REQUIRE(result.outcome->reg2 == 1);
        REQUIRE(result.outcome->reg1 % 6 == 0);
        counts[result.outcome->reg1] += 1;
    }
    const double p = 1.0 / 85.0;
    const double expected = samples * p;
    const double bound = 3.0 * std::sqrt(samples * p * (1.0 - p));
    for (u64 k = 1; k <= 85; ++k) {
        const double observed = counts[6 * k];
        REQUIRE(std::abs(observed - expected) <= bound);
    }
}

TEST_CASE("linearity: combine after divide restores any state") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len_dist(1, 4);
    std::uniform_real_distribution<double> coeff_dist(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const DualityState original = random_state({0, 500, 3}, 1 + trial % 64, rng, false);
        std::vector<Amplitude> coefficients;
        Amplitude sum{0.0, 0.0};
        const int parts = len_dist(rng);
        for (int i = 0; i + 1 < parts; ++i) {
            const Amplitude c{coeff_dist(rng), coeff_dist(rng)};
            coefficients.push_back(c);
            sum += c;
        }
        coefficients.push_back(Amplitude{1.0, 0.0} - sum);
        const DualityState roundtrip = combine(divide(original, coefficients));
        for (const auto& [label, amp] : original.terms()) {
            REQUIRE(std::abs(roundtrip.amplitude(label) - amp) < 1e-9);
        }
        for (const auto& [label, amp] : roundtrip.terms()) {
            REQUIRE(std::abs(original.amplitude(label) - amp) < 1e-9);
        }
    }
}

TEST_CASE("oracle applications conserve the norm") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const DualityState state = random_state({0, 1000, 7}, 200, rng);
        const double before = state.norm_sq();
        const FunctionOracle fn{"shuffle", [](u64 reg1) { return (reg1 * 5 + 3) % 8; }};
        CHECK(apply_function(state, fn).norm_sq() == Catch::Approx(before).margin(1e-12));
        const SignOracle sign{"parity", [](u64 reg1, u64 reg2) { return (reg1 + reg2) % 2 ? 1 : -1; }};
        CHECK(apply_sign(state, sign).norm_sq() == Catch::Approx(before).margin(1e-12));
    }
}

TEST_CASE("two-path interference keeps marked terms and erases the rest") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> size_dist(1, 10000);
    for (int trial = 0; trial < 40; ++trial) {
        const DualityState original = random_state({0, 60000, 1}, size_dist(rng), rng);
        std::set<BasisLabel> marked;
        for (const auto& [label, amp] : original.terms()) {
            if (rng() % 2 == 0) marked.insert(label);
        }
        SubWaveBundle bundle = divide(original, {0.5, 0.5});
        const SignOracle mark{"mark", [&marked](u64 reg1, u64 reg2) {
                                  return marked.contains(BasisLabel{reg1, reg2}) ? 1 : -1;
                              }};
        bundle.parts[1] = apply_sign(std::move(bundle.parts[1]), mark);
        const DualityState combined = combine(std::move(bundle));
        REQUIRE(combined.term_count() == marked.size());
        for (const auto& [label, amp] : original.terms()) {
            if (marked.contains(label)) {
                REQUIRE(std::abs(combined.amplitude(label) - amp) < 1e-9);
            } else {
                REQUIRE(combined.amplitude(label) == Amplitude{0.0, 0.0});
            }
        }
    }
}
