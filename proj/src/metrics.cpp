#include "evomtd/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace evomtd {

double investment_bias(double mean_izda, double mean_izdb) {
    const double total = mean_izda + mean_izdb;
    if (total == 0.0) {
        throw std::domain_error("investment_bias: both mean investments are zero");
    }
    return (mean_izdb - mean_izda) / total;
}

GenerationStats aggregate_generation(const ScoredPopulation& scored) {
    if (scored.members.empty()) {
        throw std::invalid_argument("aggregate_generation: empty population");
    }
    const double n = static_cast<double>(scored.members.size());
    GenerationStats stats;
    stats.generation = scored.generation;
    stats.best_fitness = scored.members.front().fitness.total;
    for (const ScoredMember& m : scored.members) {
        stats.mean_fitness += m.fitness.total;
        stats.mean_transitions += m.trace.state_changes;
        stats.mean_payoff += m.trace.payoff;
        stats.mean_izda += m.trace.investment_zda;
        stats.mean_izdb += m.trace.investment_zdb;
        if (m.fitness.total > stats.best_fitness) {
            stats.best_fitness = m.fitness.total;
        }
    }
    stats.mean_fitness /= n;
    stats.mean_transitions /= n;
    stats.mean_payoff /= n;
    stats.mean_izda /= n;
    stats.mean_izdb /= n;
    stats.investment_bias = investment_bias(stats.mean_izda, stats.mean_izdb);
    return stats;
}

std::vector<CrossRunStats> aggregate_runs(
    const std::vector<std::vector<GenerationStats>>& per_run_stats) {
    if (per_run_stats.empty()) {
        throw std::invalid_argument("aggregate_runs: no runs");
    }
    const std::size_t generations = per_run_stats.front().size();
    for (const auto& run : per_run_stats) {
        if (run.size() != generations) {
            throw std::invalid_argument(
                "aggregate_runs: runs disagree on generation count");
        }
    }
    const double r = static_cast<double>(per_run_stats.size());

    std::vector<CrossRunStats> out(generations);
    for (std::size_t g = 0; g < generations; ++g) {
        CrossRunStats& agg = out[g];
        agg.generation = per_run_stats.front()[g].generation;
        agg.mean.generation = agg.generation;
        agg.stddev.generation = agg.generation;
        for (const auto field : kStatFields) {
            double sum = 0.0;
            for (const auto& run : per_run_stats) sum += run[g].*field;
            const double mean = sum / r;
            double sq = 0.0;
            for (const auto& run : per_run_stats) {
                const double d = run[g].*field - mean;
                sq += d * d;
            }
            agg.mean.*field = mean;
            agg.stddev.*field = std::sqrt(sq / r);
        }
    }
    return out;
}

}  // namespace evomtd
