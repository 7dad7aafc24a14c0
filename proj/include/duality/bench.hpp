#pragma once

#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "duality/algorithms.hpp"
#include "duality/baselines.hpp"
#include "duality/trace.hpp"

namespace duality {

inline constexpr u64 bench_ceiling = 1000000;       // desk-scale upper bound
inline constexpr u64 bench_dense_limit = 10000;     // every odd composite up to here
inline constexpr u64 bench_shor_register_cap = 4096;  // op counts are register-size independent

struct BenchRow {
    u64 n = 0;
    u64 dc_naive_ops = 0;
    u64 dc_shor_ops = 0;
    u64 dc_fermat_ops = 0;
    u64 classical_fermat_steps = 0;
    u64 trial_division_steps = 0;
};

inline bool is_odd_composite(u64 n) { return n >= 9 && n % 2 == 1 && !is_prime(n); }

namespace detail {

// Primitive count of one Shor prepare-and-measure pass. The register size
// is capped for large n: the count does not depend on it, only the
// simulated wave width does.
inline u64 bench_shor_ops(u64 n, u64 seed) {
    ShorParams params;
    params.base_a = 2;  // n odd, so always coprime
    const u64 q = default_precision_q(n);
    if (q > bench_shor_register_cap) {
        params.precision_q = bench_shor_register_cap;
        params.allow_q_out_of_range = true;
    } else {
        params.precision_q = q;
    }
    if (n >= 15) {
        return ops_through_first_readout(dc_shor(n, params, seed).trace);
    }
    // n = 9: below dc_shor's input floor; measure the same pipeline directly.
    TraceRecorder rec;
    DualityState wave = shor_interference_wave(n, params, &rec);
    const ReadoutResult result = readout(wave, seed);
    record_readout(&rec, "shor:readout", wave, result);
    return ops_through_first_readout(rec.events());
}

// Odd composites to bench: every one up to bench_dense_limit, then a
// geometric sample so desk-scale ranges stay tractable.
inline std::vector<u64> bench_inputs(u64 n_min, u64 n_max) {
    std::vector<u64> inputs;
    const u64 dense_max = std::min(n_max, bench_dense_limit);
    for (u64 n = n_min | 1; n <= dense_max; n += 2) {
        if (is_odd_composite(n)) inputs.push_back(n);
    }
    if (n_max > bench_dense_limit) {
        const double lo = static_cast<double>(std::max(n_min, bench_dense_limit + 1));
        const double hi = static_cast<double>(n_max);
        const int points = 64;
        u64 last = inputs.empty() ? 0 : inputs.back();
        for (int k = 0; k < points; ++k) {
            const double t = points == 1 ? 0.0 : static_cast<double>(k) / (points - 1);
            u64 n = static_cast<u64>(lo * std::pow(hi / lo, t));
            while (n <= n_max && !is_odd_composite(n)) ++n;
            if (n > n_max || n <= last) continue;
            inputs.push_back(n);
            last = n;
        }
    }
    return inputs;
}

}  // namespace detail

inline BenchRow bench_one(u64 n, u64 seed) {
    BenchRow row;
    row.n = n;
    row.dc_naive_ops = ops_through_first_readout(naive_factorize(n, seed).trace);
    row.dc_shor_ops = detail::bench_shor_ops(n, seed);
    row.dc_fermat_ops = ops_through_first_readout(dc_fermat(n, seed).trace);
    row.classical_fermat_steps = classical_fermat(n).steps;
    row.trial_division_steps = trial_division(n).steps;
    return row;
}

inline std::vector<BenchRow> run_bench(u64 n_min, u64 n_max, u64 seed = 0) {
    if (n_min < 9 || n_min > n_max) throw std::invalid_argument("bench range must satisfy 9 <= min <= max");
    if (n_max > bench_ceiling) throw std::invalid_argument("bench range exceeds the desk-scale ceiling");
    std::vector<BenchRow> rows;
    for (const u64 n : detail::bench_inputs(n_min, n_max)) {
        rows.push_back(bench_one(n, seed ^ n));
    }
    return rows;
}

inline constexpr const char* bench_csv_header =
    "n,dc_naive_ops,dc_shor_ops,dc_fermat_ops,classical_fermat_steps,trial_division_steps";

inline void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << bench_csv_header << '\n';
    for (const BenchRow& row : rows) {
        out << row.n << ',' << row.dc_naive_ops << ',' << row.dc_shor_ops << ',' << row.dc_fermat_ops
            << ',' << row.classical_fermat_steps << ',' << row.trial_division_steps << '\n';
    }
}

}  // namespace duality
