#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "duality/arith.hpp"
#include "duality/core.hpp"
#include "duality/oracles.hpp"
#include "duality/trace.hpp"

namespace duality {

enum class RunStatus {
    factors_found,
    no_representation_found,  // empty interference support; certifies primality
    post_processing_failed,   // period found but unusable, retry with another base
};

inline const char* to_string(RunStatus status) {
    switch (status) {
        case RunStatus::factors_found: return "factors found";
        case RunStatus::no_representation_found: return "no representation found";
        case RunStatus::post_processing_failed: return "post-processing failed";
    }
    return "unknown";
}

struct FactorOutcome {
    u64 input_n = 0;
    std::vector<u64> factors;       // ascending; empty when none certified
    std::optional<u64> period;      // inferred multiplicative order (Shor)
    std::vector<u64> foundlist;     // divisors in discovery order (naive)
    double success_probability = 0.0;  // post-combine norm^2 of the first readout
    std::map<std::string, std::size_t> op_counts;
    u64 seed = 0;
    std::vector<TraceEvent> trace;
    RunStatus status = RunStatus::factors_found;
    std::string note;
};

struct ShorParams {
    u64 base_a = 2;
    u64 precision_q = 0;  // 0 selects the power of two in (n^2, 2 n^2]
    std::size_t max_samples = 32;
    std::size_t stability_window = 3;
    bool allow_q_out_of_range = false;
};

// The unique power of two q with n^2 < q <= 2 n^2.
inline u64 default_precision_q(u64 n) {
    const u128 lower = static_cast<u128>(n) * n;
    u128 q = 1;
    while (q <= lower) q <<= 1;
    return static_cast<u64>(q);
}

namespace detail {

inline std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

inline void record(TraceRecorder* rec, const char* op, std::string label, const DualityState& state,
                   std::map<std::string, std::string> payload = {}) {
    if (rec) rec->record(op, std::move(label), state.norm_sq(), state.term_count(), std::move(payload));
}

inline void record_divide(TraceRecorder* rec, std::string label, const SubWaveBundle& bundle) {
    if (!rec) return;
    double total = 0.0;
    std::size_t support = 0;
    for (const DualityState& part : bundle.parts) {
        total += part.norm_sq();
        support = std::max(support, part.term_count());
    }
    rec->record("divide", std::move(label), total, support,
                {{"paths", std::to_string(bundle.parts.size())}});
}

inline void record_readout(TraceRecorder* rec, std::string label, const DualityState& state,
                           const ReadoutResult& result) {
    if (!rec) return;
    std::map<std::string, std::string> payload{
        {"found", result.outcome ? "yes" : "no"},
        {"success_probability", format_double(result.success_probability)}};
    if (result.outcome) {
        payload["reg1"] = std::to_string(result.outcome->reg1);
        payload["reg2"] = std::to_string(result.outcome->reg2);
    }
    rec->record("readout", std::move(label), state.norm_sq(), state.term_count(), std::move(payload));
}

inline std::map<std::string, std::string> init_payload(const RegisterSpec& spec, u64 reg2) {
    return {{"reg1_min", std::to_string(spec.reg1_min)},
            {"reg1_max", std::to_string(spec.reg1_max)},
            {"reg2", std::to_string(reg2)}};
}

}  // namespace detail

// Builds the post-combine wave of one naive-search iteration: uniform wave
// over candidate divisors, divisor indicator evaluated into reg2, two-path
// split with the sign query on the lower path, then recombination. Only
// divisors of n absent from the foundlist survive.
inline DualityState naive_interference_wave(u64 n, const std::set<u64>& foundlist,
                                            TraceRecorder* rec = nullptr,
                                            std::map<std::string, std::string> init_extra = {}) {
    const RegisterSpec spec{2, nearest_sqrt(n) + 1, 1};
    DualityState state = init_uniform(spec, 0);
    auto payload = detail::init_payload(spec, 0);
    payload.merge(init_extra);
    detail::record(rec, "init", "naive:prepare", state, std::move(payload));

    const FunctionOracle oracle = divides_oracle(n);
    state = apply_function(std::move(state), oracle);
    detail::record(rec, "apply_function", "naive:oracle", state, {{"oracle", oracle.name}});

    SubWaveBundle bundle = divide(std::move(state), {0.5, 0.5});
    detail::record_divide(rec, "naive:split", bundle);

    const SignOracle mark = divisor_mark_oracle(foundlist);
    bundle.parts[1] = apply_sign(std::move(bundle.parts[1]), mark);
    detail::record(rec, "apply_sign", "naive:mark", bundle.parts[1], {{"oracle", mark.name}});

    DualityState combined = combine(std::move(bundle));
    detail::record(rec, "combine", "naive:merge", combined);
    return combined;
}

// Naive search: repeatedly prepares the interference wave, reads out one
// not-yet-found divisor, and stops when the wave cancels to nothing. The
// foundlist then holds every divisor of n in [2, nearest_sqrt(n) + 1];
// factors are completed classically by dividing out its prime members.
inline FactorOutcome naive_factorize(u64 n, u64 seed) {
    if (n < 4) throw std::invalid_argument("input too small");

    FactorOutcome outcome;
    outcome.input_n = n;
    outcome.seed = seed;

    TraceRecorder rec;
    std::mt19937_64 rng(seed);
    std::set<u64> found;
    const u64 max_iterations = nearest_sqrt(n) + 3;

    for (u64 iteration = 1;; ++iteration) {
        if (iteration > max_iterations) {
            throw std::logic_error("naive search failed to terminate");  // unreachable
        }
        DualityState wave =
            naive_interference_wave(n, found, &rec, {{"iteration", std::to_string(iteration)}});
        const ReadoutResult result = readout(wave, rng);
        detail::record_readout(&rec, "naive:readout", wave, result);
        if (iteration == 1) outcome.success_probability = result.success_probability;
        if (!result.outcome) break;
        const u64 divisor = result.outcome->reg1;
        if (!found.insert(divisor).second) {
            throw std::logic_error("naive search re-read a found divisor");  // unreachable
        }
        outcome.foundlist.push_back(divisor);
    }

    if (found.empty()) {
        outcome.status = RunStatus::no_representation_found;
        outcome.note = "no divisors in range (prime)";
    } else {
        u64 rest = n;
        for (const u64 d : found) {
            if (!is_prime(d)) continue;
            while (rest % d == 0) {
                outcome.factors.push_back(d);
                rest /= d;
            }
        }
        if (rest > 1) outcome.factors.push_back(rest);  // lone prime cofactor above the range
        std::sort(outcome.factors.begin(), outcome.factors.end());
        outcome.status = RunStatus::factors_found;
    }

    outcome.op_counts = rec.counts();
    outcome.trace = rec.take_events();
    return outcome;
}

// Builds the post-combine wave of the period-finding run: uniform wave over
// [0, q-1], a^x mod n evaluated into reg2, two-path split with the sign
// query on the lower path, then recombination. The surviving support is
// exactly {|kr>|1> : k >= 1, kr <= q-1} for r the order of a mod n.
inline DualityState shor_interference_wave(u64 n, const ShorParams& params,
                                           TraceRecorder* rec = nullptr) {
    const RegisterSpec spec{0, params.precision_q - 1, n - 1};
    DualityState state = init_uniform(spec, 0);
    detail::record(rec, "init", "shor:prepare", state, detail::init_payload(spec, 0));

    const FunctionOracle oracle = modexp_oracle(params.base_a, n);
    state = apply_function(std::move(state), oracle);
    detail::record(rec, "apply_function", "shor:oracle", state, {{"oracle", oracle.name}});

    SubWaveBundle bundle = divide(std::move(state), {0.5, 0.5});
    detail::record_divide(rec, "shor:split", bundle);

    const SignOracle mark = period_mark_oracle();
    bundle.parts[1] = apply_sign(std::move(bundle.parts[1]), mark);
    detail::record(rec, "apply_sign", "shor:mark", bundle.parts[1], {{"oracle", mark.name}});

    DualityState combined = combine(std::move(bundle));
    detail::record(rec, "combine", "shor:merge", combined);
    return combined;
}

// Period finding without a Fourier transform: the combined wave supports
// only the nonzero multiples of the order r, so repeated readouts converge
// to r through a running gcd. Standard order-to-factor post-processing.
inline FactorOutcome dc_shor(u64 n, ShorParams params, u64 seed) {
    if (n < 15 || n % 2 == 0) throw std::invalid_argument("dc_shor requires odd n >= 15");
    if (params.base_a < 2) throw std::invalid_argument("shor base must be >= 2");
    if (params.precision_q == 0) params.precision_q = default_precision_q(n);
    if (!params.allow_q_out_of_range) {
        const u128 q = params.precision_q;
        const u128 n_sq = static_cast<u128>(n) * n;
        if (q <= n_sq || q > 2 * n_sq) {
            throw std::invalid_argument("precision q outside (n^2, 2*n^2]; pass the override to allow");
        }
    }
    if (params.max_samples == 0 || params.stability_window == 0) {
        throw std::invalid_argument("sampling parameters must be positive");
    }

    FactorOutcome outcome;
    outcome.input_n = n;
    outcome.seed = seed;

    // Non-coprime base: the gcd is already a factor.
    const u64 g = gcd(params.base_a, n);
    if (g > 1) {
        outcome.factors = {std::min(g, n / g), std::max(g, n / g)};
        outcome.status = RunStatus::factors_found;
        outcome.note = "degenerate: gcd(base, n) > 1";
        outcome.success_probability = 1.0;
        return outcome;
    }

    TraceRecorder rec;
    DualityState wave = shor_interference_wave(n, params, &rec);

    std::mt19937_64 rng(seed);
    u64 running_gcd = 0;
    std::size_t unchanged = 0;
    bool empty_wave = false;
    for (std::size_t sample = 0; sample < params.max_samples; ++sample) {
        const ReadoutResult result = readout(wave, rng);
        detail::record_readout(&rec, "shor:readout", wave, result);
        if (sample == 0) outcome.success_probability = result.success_probability;
        if (!result.outcome) {
            empty_wave = true;
            break;
        }
        const u64 next = gcd(running_gcd, result.outcome->reg1);
        if (running_gcd != 0 && next == running_gcd) {
            if (++unchanged >= params.stability_window) {
                running_gcd = next;
                break;
            }
        } else {
            unchanged = 0;
        }
        running_gcd = next;
    }

    outcome.op_counts = rec.counts();
    outcome.trace = rec.take_events();

    if (empty_wave || running_gcd == 0) {
        outcome.status = RunStatus::post_processing_failed;
        outcome.note = "no readout support; period not observable at this precision";
        return outcome;
    }

    const u64 r = running_gcd;
    outcome.period = r;

    if (r % 2 != 0) {
        outcome.status = RunStatus::post_processing_failed;
        outcome.note = "post-processing failed, retry with different base";
        return outcome;
    }
    const u64 half_power = modexp(params.base_a, r / 2, n);
    if (half_power == n - 1) {
        outcome.status = RunStatus::post_processing_failed;
        outcome.note = "post-processing failed, retry with different base";
        return outcome;
    }
    u64 factor = gcd(half_power >= 1 ? half_power - 1 : 0, n);
    if (factor <= 1 || factor >= n) factor = gcd(half_power + 1, n);
    if (factor <= 1 || factor >= n) {
        outcome.status = RunStatus::post_processing_failed;
        outcome.note = "post-processing failed, retry with different base";
        return outcome;
    }
    outcome.factors = {std::min(factor, n / factor), std::max(factor, n / factor)};
    outcome.status = RunStatus::factors_found;
    return outcome;
}

// Builds the post-combine wave of the Fermat run: uniform wave over
// [ceil(sqrt(n)), floor(n/2)], two-path split with the perfect-square sign
// query on the upper path, then recombination. Survivors are exactly the x
// with x^2 - n a perfect square.
inline DualityState fermat_interference_wave(u64 n, TraceRecorder* rec = nullptr) {
    const RegisterSpec spec{ceil_sqrt(n), n / 2, 0};
    DualityState state = init_uniform(spec, 0);
    detail::record(rec, "init", "fermat:prepare", state, detail::init_payload(spec, 0));

    SubWaveBundle bundle = divide(std::move(state), {0.5, 0.5});
    detail::record_divide(rec, "fermat:split", bundle);

    const SignOracle mark = fermat_square_oracle(n);
    bundle.parts[0] = apply_sign(std::move(bundle.parts[0]), mark);
    detail::record(rec, "apply_sign", "fermat:mark", bundle.parts[0], {{"oracle", mark.name}});

    DualityState combined = combine(std::move(bundle));
    detail::record(rec, "combine", "fermat:merge", combined);
    return combined;
}

// Difference-of-squares factorization: reads out an X with X^2 - n = Y^2,
// giving factors X+Y and X-Y. An empty combined wave means no such X exists
// in [ceil(sqrt(n)), floor(n/2)], which for odd n certifies primality.
inline FactorOutcome dc_fermat(u64 n, u64 seed) {
    if (n % 2 == 0) throw std::invalid_argument("Fermat method requires odd input");
    if (n < 9) throw std::invalid_argument("input too small");

    FactorOutcome outcome;
    outcome.input_n = n;
    outcome.seed = seed;

    TraceRecorder rec;
    DualityState wave = fermat_interference_wave(n, &rec);

    std::mt19937_64 rng(seed);
    const ReadoutResult result = readout(wave, rng);
    detail::record_readout(&rec, "fermat:readout", wave, result);
    outcome.success_probability = result.success_probability;
    outcome.op_counts = rec.counts();
    outcome.trace = rec.take_events();

    if (!result.outcome) {
        outcome.status = RunStatus::no_representation_found;
        outcome.note = "no representation found";
        return outcome;
    }

    const u64 x = result.outcome->reg1;
    const u64 y = static_cast<u64>(isqrt(static_cast<u128>(x) * x - n));
    outcome.factors = {x - y, x + y};
    if ((x - y) * (x + y) != n) {
        throw std::logic_error("fermat factors do not multiply back");  // unreachable
    }
    outcome.status = RunStatus::factors_found;
    return outcome;
}

}  // namespace duality
