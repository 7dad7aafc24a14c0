#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "duality/algorithms.hpp"
#include "duality/baselines.hpp"
#include "duality/bench.hpp"
#include "duality/trace_json.hpp"

namespace duality {

enum class Algorithm { naive, shor, fermat, trial, classical_fermat };

inline const char* to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::naive: return "naive";
        case Algorithm::shor: return "shor";
        case Algorithm::fermat: return "fermat";
        case Algorithm::trial: return "trial";
        case Algorithm::classical_fermat: return "classical-fermat";
    }
    return "unknown";
}

inline std::optional<Algorithm> parse_algorithm(const std::string& name) {
    if (name == "naive") return Algorithm::naive;
    if (name == "shor") return Algorithm::shor;
    if (name == "fermat") return Algorithm::fermat;
    if (name == "trial") return Algorithm::trial;
    if (name == "classical-fermat") return Algorithm::classical_fermat;
    return std::nullopt;
}

enum class OutputFormat { text, json };

struct RunConfig {
    Algorithm algorithm = Algorithm::naive;
    u64 n = 0;
    u64 seed = 0;
    std::optional<u64> shor_base;
    std::optional<u64> shor_q;
    std::optional<std::size_t> max_samples;
    bool allow_q_out_of_range = false;
    std::optional<std::string> trace_path;
    OutputFormat format = OutputFormat::text;
};

namespace detail {

// Everything a report can show, normalized across wave algorithms and
// classical baselines.
struct Report {
    std::string algorithm;
    u64 n = 0;
    u64 seed = 0;
    std::string status;
    std::vector<u64> factors;
    std::optional<u64> period;
    std::optional<std::vector<u64>> foundlist;
    std::optional<double> success_probability;
    std::optional<std::map<std::string, std::size_t>> op_counts;
    std::optional<u64> steps;
    std::string note;
    std::size_t trace_events = 0;
    int exit_code = 0;
};

inline std::string status_with_prime_tag(RunStatus status) {
    std::string text = to_string(status);
    if (status == RunStatus::no_representation_found) text += " (prime)";
    return text;
}

inline Report report_from_outcome(Algorithm algorithm, const FactorOutcome& outcome) {
    Report report;
    report.algorithm = to_string(algorithm);
    report.n = outcome.input_n;
    report.seed = outcome.seed;
    report.status = status_with_prime_tag(outcome.status);
    report.factors = outcome.factors;
    report.period = outcome.period;
    if (algorithm == Algorithm::naive) report.foundlist = outcome.foundlist;
    report.success_probability = outcome.success_probability;
    report.op_counts = outcome.op_counts;
    report.note = outcome.note;
    report.trace_events = outcome.trace.size();
    report.exit_code = outcome.status == RunStatus::post_processing_failed ? 2 : 0;
    return report;
}

inline void render_text(const Report& report, std::ostream& out) {
    out << "algorithm: " << report.algorithm << '\n';
    out << "n: " << report.n << '\n';
    out << "seed: " << report.seed << '\n';
    out << "status: " << report.status << '\n';
    if (report.period) out << "period: " << *report.period << '\n';
    out << "factors:";
    if (report.factors.empty()) {
        out << " none";
    } else {
        for (const u64 f : report.factors) out << ' ' << f;
    }
    out << '\n';
    if (report.foundlist) {
        out << "foundlist:";
        if (report.foundlist->empty()) out << " none";
        for (const u64 d : *report.foundlist) out << ' ' << d;
        out << '\n';
    }
    if (report.success_probability) {
        out << "success_probability: " << format_double(*report.success_probability) << '\n';
    }
    if (report.steps) out << "steps: " << *report.steps << '\n';
    if (report.op_counts) {
        out << "op_counts:";
        for (const auto& [op, count] : *report.op_counts) out << ' ' << op << '=' << count;
        out << '\n';
    }
    if (!report.note.empty()) out << "note: " << report.note << '\n';
    out << "trace_events: " << report.trace_events << '\n';
}

inline void render_json(const Report& report, std::ostream& out) {
    nlohmann::json j{{"algorithm", report.algorithm},
                     {"n", report.n},
                     {"seed", report.seed},
                     {"status", report.status},
                     {"factors", report.factors},
                     {"trace_events", report.trace_events}};
    if (report.period) j["period"] = *report.period;
    if (report.foundlist) j["foundlist"] = *report.foundlist;
    if (report.success_probability) j["success_probability"] = *report.success_probability;
    if (report.steps) j["steps"] = *report.steps;
    if (report.op_counts) j["op_counts"] = *report.op_counts;
    if (!report.note.empty()) j["note"] = report.note;
    out << j.dump() << '\n';
}

inline bool write_trace_file(const std::string& path, const std::vector<TraceEvent>& events,
                             std::ostream& err) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "cannot open trace path: " << path << '\n';
        return false;
    }
    for (const TraceEvent& event : events) {
        file << nlohmann::json(event).dump() << '\n';
    }
    return true;
}

}  // namespace detail

// Executes one configured run and writes the report. Returns the process
// exit status: 0 factors found or primality certified, 1 usage/validation
// error, 2 no result.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const bool is_shor = config.algorithm == Algorithm::shor;
    if (!is_shor && (config.shor_base || config.shor_q || config.max_samples ||
                     config.allow_q_out_of_range)) {
        err << "options --base/--q/--max-samples/--allow-q-out-of-range are only valid for shor\n";
        return 1;
    }

    detail::Report report;
    std::vector<TraceEvent> trace;
    try {
        switch (config.algorithm) {
            case Algorithm::naive: {
                const FactorOutcome outcome = naive_factorize(config.n, config.seed);
                trace = outcome.trace;
                report = detail::report_from_outcome(config.algorithm, outcome);
                break;
            }
            case Algorithm::shor: {
                ShorParams params;
                if (config.shor_base) params.base_a = *config.shor_base;
                if (config.shor_q) params.precision_q = *config.shor_q;
                if (config.max_samples) params.max_samples = *config.max_samples;
                params.allow_q_out_of_range = config.allow_q_out_of_range;
                const FactorOutcome outcome = dc_shor(config.n, params, config.seed);
                trace = outcome.trace;
                report = detail::report_from_outcome(config.algorithm, outcome);
                break;
            }
            case Algorithm::fermat: {
                const FactorOutcome outcome = dc_fermat(config.n, config.seed);
                trace = outcome.trace;
                report = detail::report_from_outcome(config.algorithm, outcome);
                break;
            }
            case Algorithm::trial: {
                const BaselineReport result = report_trial_division(config.n);
                report.algorithm = to_string(config.algorithm);
                report.n = config.n;
                report.seed = config.seed;
                report.status = "factors found";
                report.factors = result.factors;
                report.steps = result.steps;
                break;
            }
            case Algorithm::classical_fermat: {
                const BaselineReport result = report_classical_fermat(config.n);
                report.algorithm = to_string(config.algorithm);
                report.n = config.n;
                report.seed = config.seed;
                report.steps = result.steps;
                if (!result.factors.empty()) {
                    report.status = "factors found";
                    report.factors = result.factors;
                } else {
                    report.status = "no representation found (prime)";
                    report.note = "prime or no representation";
                }
                break;
            }
        }
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        err << e.what() << '\n';
        return 1;
    }

    if (config.trace_path && !detail::write_trace_file(*config.trace_path, trace, err)) return 1;

    if (config.format == OutputFormat::text) {
        detail::render_text(report, out);
    } else {
        detail::render_json(report, out);
    }
    return report.exit_code;
}

// Executes the comparison benchmark and writes the CSV. Same exit contract
// as run().
inline int bench(u64 n_min, u64 n_max, const std::string& out_path, std::ostream& err) {
    std::vector<BenchRow> rows;
    try {
        rows = run_bench(n_min, n_max);
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 1;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "cannot open output path: " << out_path << '\n';
        return 1;
    }
    write_bench_csv(rows, file);
    return 0;
}

}  // namespace duality
