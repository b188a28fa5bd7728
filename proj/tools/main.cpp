// Command-line entry point: runs one experiment against a chosen defender,
// or a whole defender-family suite, and writes plot-ready CSV results.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "evomtd/errors.hpp"
#include "evomtd/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"evomtd - evolves attacker investment strategies against "
                 "platform-migration defenses"};

    std::string config_path;
    std::string defender;
    std::string suite;
    std::string out_dir;
    std::uint64_t seed = 0;
    int runs = -1;
    int generations = -1;
    bool dump_traces = false;

    app.add_option("--config", config_path, "configuration file (key = value lines)");
    auto* defender_opt =
        app.add_option("--defender", defender, "defender policy name");
    auto* suite_opt = app.add_option("--suite", suite,
                                     "run a whole defender family: 1to1 or 2to1");
    auto* seed_opt = app.add_option("--seed", seed, "master seed");
    app.add_option("--runs", runs, "number of independent runs");
    app.add_option("--generations", generations, "generations per run");
    app.add_option("--out", out_dir, "output directory");
    app.add_flag("--dump-traces", dump_traces, "write per-match trace dumps");
    suite_opt->excludes(defender_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        evomtd::ExperimentConfig config;
        if (!config_path.empty()) {
            evomtd::apply_config_file(config, config_path);
        }
        if (!defender.empty()) config.defender = evomtd::parse_defender(defender);
        if (seed_opt->count() > 0) config.master_seed = seed;
        if (runs >= 0) config.runs = runs;
        if (generations >= 0) config.ga.generations = generations;
        if (!out_dir.empty()) config.out_dir = out_dir;
        if (dump_traces) config.dump_traces = true;

        if (!suite.empty()) {
            const auto results = evomtd::run_suite(suite, config);
            for (const auto& result : results) {
                std::cout << "wrote " << result.out_dir.string() << "\n";
            }
            std::cout << "wrote " << (config.out_dir / "comparison.csv").string()
                      << "\n";
        } else {
            const auto result = evomtd::run_experiment(config);
            std::cout << "wrote " << result.per_run_csv.string() << "\n"
                      << "wrote " << result.aggregate_csv.string() << "\n"
                      << "wrote " << result.manifest.string() << "\n";
        }
    } catch (const evomtd::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
