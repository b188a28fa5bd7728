#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "evomtd/evolution.hpp"
#include "evomtd/metrics.hpp"

namespace evomtd {

// Full description of one batch experiment: R independent runs of the
// evolve loop against one defender. The defaults reproduce the reference
// setup (T=365, N=30, 100 generations, 100 runs, Gamma costs with mean 100
// and variance 30, reward 1, complexity weight 0.1).
struct ExperimentConfig {
    DefenderKind defender = DefenderKind::SingleFlipFixedOrder;
    int matches = 365;
    int runs = 100;
    std::uint64_t master_seed = 1;
    CostModel cost_model;
    FitnessParams fitness_params;
    GaParams ga;
    CostSampling cost_sampling = CostSampling::PerGeneration;
    std::filesystem::path out_dir = "out";
    bool dump_traces = false;
    int threads = 1;  // worker threads for runs; results do not depend on it
};

// Throws ConfigError naming the offending field.
void validate(const ExperimentConfig& config);

// Applies one configuration key. Keys match the config-file schema
// (defender, matches, runs, master_seed, population, generations,
// crossover_fraction, mutation_rate, tournament_size, cost_mean,
// cost_variance, cost_sampling, reward_per_exploit, complexity_weight,
// transition_penalty, transition_penalty_mode, out_dir, dump_traces,
// threads). Throws ConfigError on unknown keys or unparsable values.
void apply_key_value(ExperimentConfig& config, std::string_view key,
                     std::string_view value);

// Loads a flat key = value file ('#' starts a comment).
void apply_config_file(ExperimentConfig& config, const std::filesystem::path& path);

EvolveConfig evolve_config(const ExperimentConfig& config);

struct ExperimentResult {
    std::filesystem::path out_dir;
    std::filesystem::path per_run_csv;
    std::filesystem::path aggregate_csv;
    std::filesystem::path manifest;
    std::vector<std::vector<GenerationStats>> per_run;
    std::vector<CrossRunStats> aggregate;
};

// Executes all runs (streams derived from (master_seed, run index)), then
// writes per_run.csv, aggregate.csv, and manifest.json under out_dir, plus
// per-run trace dumps under traces/ when enabled. Outputs are byte-stable
// for a given config and seed.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Defender families of the two experiment suites.
std::vector<DefenderKind> suite_family(std::string_view family);  // "1to1" | "2to1"

// Runs every defender of the family under out_dir/<defender name> with a
// per-defender seed derived from the master seed, and writes a combined
// comparison.csv (defender x generation) under out_dir.
std::vector<ExperimentResult> run_suite(std::string_view family,
                                        const ExperimentConfig& base);

// Fixed-precision number formatting shared by all CSV writers.
std::string csv_double(double value);

}  // namespace evomtd
