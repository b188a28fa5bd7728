#pragma once

#include <array>
#include <vector>

#include "evomtd/population.hpp"

namespace evomtd {

// Population aggregates for one generation. Field names match the CSV
// schema emitted by the experiment runner.
struct GenerationStats {
    int generation = 0;  // 1-based
    double mean_fitness = 0.0;
    double best_fitness = 0.0;
    double mean_transitions = 0.0;
    double mean_payoff = 0.0;
    double mean_izda = 0.0;
    double mean_izdb = 0.0;
    double investment_bias = 0.0;
};

// The seven statistic columns, in CSV order, with their header names.
constexpr std::array<double GenerationStats::*, 7> kStatFields = {
    &GenerationStats::mean_fitness,    &GenerationStats::best_fitness,
    &GenerationStats::mean_transitions, &GenerationStats::mean_payoff,
    &GenerationStats::mean_izda,       &GenerationStats::mean_izdb,
    &GenerationStats::investment_bias,
};
constexpr std::array<const char*, 7> kStatNames = {
    "mean_fitness", "best_fitness", "mean_transitions", "mean_payoff",
    "mean_izda",    "mean_izdb",    "investment_bias",
};

// Normalized investment difference (ZD-B minus ZD-A over their sum), in
// [-1, 1]; positive when ZD-B investment dominates. Throws std::domain_error
// when both means are zero (cannot occur for traces of at least one match).
double investment_bias(double mean_izda, double mean_izdb);

// Arithmetic means over the population plus best fitness; the bias is
// computed from the mean investments. Throws std::invalid_argument on an
// empty population.
GenerationStats aggregate_generation(const ScoredPopulation& scored);

// Cross-run mean and standard deviation of every statistic, per generation.
// The deviation divides by the run count (so a single run reports 0).
struct CrossRunStats {
    int generation = 0;
    GenerationStats mean;
    GenerationStats stddev;
};

// Element-wise aggregation across runs. All runs must share the same
// generation count; throws std::invalid_argument otherwise.
std::vector<CrossRunStats> aggregate_runs(
    const std::vector<std::vector<GenerationStats>>& per_run_stats);

}  // namespace evomtd
