// dcfactor: runs the wave-interference factorization algorithms and the
// classical baselines, with JSON traces and a CSV comparison benchmark.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "duality/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"duality-computer factorization simulator"};
    app.require_subcommand(1);

    duality::RunConfig config;
    std::string algorithm_name;
    std::string format_name = "text";
    std::string trace_path;
    duality::u64 base = 0;
    duality::u64 q = 0;
    std::size_t max_samples = 0;

    CLI::App* run_cmd = app.add_subcommand("run", "run one algorithm on a given n");
    run_cmd->add_option("--algorithm", algorithm_name, "naive|shor|fermat|trial|classical-fermat")
        ->required();
    run_cmd->add_option("--n", config.n, "integer to factorize")->required();
    run_cmd->add_option("--seed", config.seed, "RNG seed (default 0)");
    CLI::Option* base_opt = run_cmd->add_option("--base", base, "Shor base a");
    CLI::Option* q_opt = run_cmd->add_option("--q", q, "Shor register size q");
    CLI::Option* allow_q_opt =
        run_cmd->add_flag("--allow-q-out-of-range", "bypass the n^2 < q <= 2*n^2 check");
    CLI::Option* samples_opt = run_cmd->add_option("--max-samples", max_samples, "Shor readout budget");
    run_cmd->add_option("--trace", trace_path, "write one TraceEvent JSON object per line");
    run_cmd->add_option("--format", format_name, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    duality::u64 bench_min = 0;
    duality::u64 bench_max = 0;
    std::string bench_out;
    CLI::App* bench_cmd = app.add_subcommand("bench", "compare step counts over a range of n");
    bench_cmd->add_option("--min", bench_min, "smallest n (>= 9)")->required();
    bench_cmd->add_option("--max", bench_max, "largest n")->required();
    bench_cmd->add_option("--out", bench_out, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (bench_cmd->parsed()) {
        return duality::bench(bench_min, bench_max, bench_out, std::cerr);
    }

    const auto algorithm = duality::parse_algorithm(algorithm_name);
    if (!algorithm) {
        std::cerr << "unknown algorithm: " << algorithm_name << '\n';
        return 1;
    }
    config.algorithm = *algorithm;
    config.format = format_name == "json" ? duality::OutputFormat::json : duality::OutputFormat::text;
    if (!trace_path.empty()) config.trace_path = trace_path;
    if (base_opt->count() > 0) config.shor_base = base;
    if (q_opt->count() > 0) config.shor_q = q;
    if (samples_opt->count() > 0) config.max_samples = max_samples;
    config.allow_q_out_of_range = allow_q_opt->count() > 0;

    return duality::run(config, std::cout, std::cerr);
}
