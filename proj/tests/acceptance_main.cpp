// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.
//
// The heavy criteria run desk-scale experiments (20 runs x 100 generations)
// against the relevant defenders; runs are distributed over hardware threads,
// which cannot change any result because every stream is derived from
// (seed, run, generation, role).

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "evomtd/chromosome.hpp"
#include "evomtd/evolution.hpp"
#include "evomtd/experiment.hpp"
#include "evomtd/fitness.hpp"
#include "evomtd/game.hpp"
#include "evomtd/metrics.hpp"
#include "evomtd/rng.hpp"

using namespace evomtd;

namespace {

constexpr std::uint64_t kBaseSeed = 7070;
constexpr int kRunsPerExperiment = 20;
constexpr int kGenerations = 100;
constexpr int kBatches = 5;  // independent batches for the ordering criterion

int g_failures = 0;

void report(const std::string& label, bool ok, const std::string& detail) {
    std::printf("%s: %s%s%s\n", ok ? "PASS" : "FAIL", label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

// ---------------------------------------------------------------------------
// Experiment harness shared by the evolution-dependent criteria.

struct RunOutcome {
    std::vector<GenerationStats> stats;
    std::vector<double> oracle_fitness;  // best hand-built machine, per generation
    long long games = 0;
    long long conservation_violations = 0;  // investment sum != T
    long long bias_violations = 0;          // generation bias outside [-1, 1]
    long long oracle_contract_violations = 0;
};

struct ExperimentOutcome {
    std::vector<RunOutcome> runs;
    std::vector<GenerationStats> generation(int g) const {  // 1-based
        std::vector<GenerationStats> out;
        out.reserve(runs.size());
        for (const RunOutcome& run : runs) out.push_back(run.stats[g - 1]);
        return out;
    }
};

MooreMachine always_machine(ExploitTarget target) {
    MooreMachine m;
    m.action.fill(target);
    return m;
}

RunOutcome execute_run(const EvolveConfig& config, int run) {
    RunOutcome outcome;
    const MooreMachine invest_a = always_machine(ExploitTarget::ZdA);
    const MooreMachine invest_b = always_machine(ExploitTarget::ZdB);
    const GenerationObserver observer = [&](const GenerationContext& ctx,
                                            const ScoredPopulation& scored) {
        for (const ScoredMember& member : scored.members) {
            ++outcome.games;
            if (member.trace.investment_zda + member.trace.investment_zdb !=
                config.matches) {
                ++outcome.conservation_violations;
            }
        }
        const GenerationStats stats = aggregate_generation(scored);
        if (stats.investment_bias < -1.0 || stats.investment_bias > 1.0) {
            ++outcome.bias_violations;
        }

        const auto& costs = ctx.exploit_costs.front();
        const FitnessBreakdown fit_a = fitness(
            play_game(invest_a, *ctx.defender_seq, costs), config.fitness_params);
        const FitnessBreakdown fit_b = fitness(
            play_game(invest_b, *ctx.defender_seq, costs), config.fitness_params);
        outcome.oracle_fitness.push_back(std::max(fit_a.total, fit_b.total));
        // against the fixed 1-to-1 single flip, an affordable ZD-B cost pins
        // the hand-built machine at payoff 183 + one creation reward
        if (config.defender == DefenderKind::SingleFlipFixedOrder &&
            costs[1] <= 182.0) {
            if (fit_b.game_payoff != 183.0 || fit_b.total != 184.0) {
                ++outcome.oracle_contract_violations;
            }
        }
    };
    outcome.stats = evolve_run(config, run, observer);
    return outcome;
}

ExperimentOutcome run_outcomes(DefenderKind defender, std::uint64_t seed) {
    EvolveConfig config;
    config.defender = defender;
    config.master_seed = seed;
    config.ga.generations = kGenerations;

    ExperimentOutcome outcome;
    outcome.runs.resize(kRunsPerExperiment);
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    std::atomic<int> next{0};
    auto drain = [&]() {
        for (;;) {
            const int r = next.fetch_add(1);
            if (r >= kRunsPerExperiment) return;
            outcome.runs[static_cast<std::size_t>(r)] = execute_run(config, r);
        }
    };
    std::vector<std::future<void>> tasks;
    for (unsigned w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, drain));
    }
    for (auto& task : tasks) task.get();
    return outcome;
}

std::uint64_t experiment_seed(int batch, int defender_ordinal) {
    return derive_seed(kBaseSeed, static_cast<std::uint64_t>(batch),
                       static_cast<std::uint64_t>(defender_ordinal),
                       StreamRole::Suite);
}

struct MeanAndError {
    double mean = 0.0;
    double standard_error = 0.0;
};

MeanAndError final_generation_mean_fitness(const ExperimentOutcome& outcome) {
    const auto rows = outcome.generation(kGenerations);
    double sum = 0.0;
    for (const GenerationStats& row : rows) sum += row.mean_fitness;
    const double mean = sum / static_cast<double>(rows.size());
    double sq = 0.0;
    for (const GenerationStats& row : rows) {
        sq += (row.mean_fitness - mean) * (row.mean_fitness - mean);
    }
    const double sd = std::sqrt(sq / static_cast<double>(rows.size()));
    return {mean, sd / std::sqrt(static_cast<double>(rows.size()))};
}

double final_generation_mean_bias(const ExperimentOutcome& outcome) {
    const auto rows = outcome.generation(kGenerations);
    double sum = 0.0;
    for (const GenerationStats& row : rows) sum += row.investment_bias;
    return sum / static_cast<double>(rows.size());
}

// ---------------------------------------------------------------------------
// Criteria 1-3 and 8: property suites.

void criterion_codec_round_trip() {
    RandomStream rng(kBaseSeed);
    int failures = 0;
    for (int i = 0; i < 100'000; ++i) {
        const Chromosome c = random_chromosome(rng);
        if (encode(decode(c)) != c) ++failures;
    }
    report("criterion 1 codec round-trip (100000 random chromosomes)", failures == 0,
           std::to_string(failures) + " failures");
}

void criterion_gamma_moments() {
    const CostModel model{100.0, 30.0};
    RandomStream rng(kBaseSeed + 1);
    const int n = 1'000'000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = sample_cost(model, rng);
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / n;
    const double variance = sum_sq / n - mean * mean;
    const bool ok = mean >= 99.5 && mean <= 100.5 && variance >= 28.5 && variance <= 31.5;
    report("criterion 2 gamma sampler moments (1e6 draws)", ok,
           "mean " + fmt(mean) + " in [99.5,100.5], variance " + fmt(variance) +
               " in [28.5,31.5]");
}

void criterion_fitness_arithmetic() {
    GameTrace trace;
    trace.matches = 365;
    trace.payoff = 50;
    trace.exploits_created = 2;
    trace.state_changes = 30;
    const FitnessBreakdown b = fitness(trace, FitnessParams{});
    const bool ok = b.game_payoff == 50.0 && b.creation_reward == 2.0 &&
                    b.complexity_cost == 3.0 && b.total == 49.0;
    report("criterion 3 worked fitness values (G=50, C=2, S=3, F=49)", ok,
           "G=" + fmt(b.game_payoff) + " C=" + fmt(b.creation_reward) + " S=" +
               fmt(b.complexity_cost) + " F=" + fmt(b.total));
}

void criterion_ga_structure() {
    RandomStream rng(kBaseSeed + 2);
    GaParams params;
    bool shape_ok = true;
    for (int i = 0; i < 1000 && shape_ok; ++i) {
        ScoredPopulation pop;
        for (int j = 0; j < params.population_size; ++j) {
            ScoredMember m;
            m.chromosome = random_chromosome(rng);
            m.fitness.total = rng.next_unit() * 250.0 - 30.0;
            pop.members.push_back(std::move(m));
        }
        const auto next = next_generation(pop, params, rng);
        shape_ok = next.size() == 30;
        for (const Chromosome& c : next) {
            for (const auto bit : c.bits) shape_ok &= bit == 0 || bit == 1;
        }
    }

    const Chromosome only = random_chromosome(rng);
    ScoredPopulation homogeneous;
    for (int j = 0; j < 30; ++j) {
        ScoredMember m;
        m.chromosome = only;
        m.fitness.total = 5.0;
        homogeneous.members.push_back(std::move(m));
    }
    GaParams frozen = params;
    frozen.per_bit_mutation_rate = 0.0;
    bool fixed_point = true;
    for (const Chromosome& c : next_generation(homogeneous, frozen, rng)) {
        fixed_point &= c == only;
    }

    ScoredPopulation two;
    for (const double f : {10.0, 0.0}) {
        ScoredMember m;
        m.chromosome = only;
        m.fitness.total = f;
        two.members.push_back(std::move(m));
    }
    const int trials = 100'000;
    int wins = 0;
    for (int i = 0; i < trials; ++i) {
        if (tournament_select(two, 2, rng) == 0) ++wins;
    }
    const double rate = static_cast<double>(wins) / trials;
    const bool rate_ok = std::abs(rate - 0.75) <= 0.02;

    report("criterion 8 GA structural suite", shape_ok && fixed_point && rate_ok,
           "shape " + std::string(shape_ok ? "ok" : "bad") + ", fixed point " +
               (fixed_point ? "ok" : "bad") + ", tournament win rate " + fmt(rate) +
               " within 0.75 +/- 0.02");
}

// ---------------------------------------------------------------------------
// Criterion 9: byte-identical experiment outputs under a fixed seed.

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void criterion_determinism() {
    const std::filesystem::path root =
        std::filesystem::temp_directory_path() / "evomtd_acceptance";
    std::filesystem::remove_all(root);

    ExperimentConfig config;
    config.runs = 3;
    config.ga.generations = 10;
    config.master_seed = kBaseSeed;
    config.threads = 0;

    config.out_dir = root / "a";
    const ExperimentResult first = run_experiment(config);
    config.out_dir = root / "b";
    const ExperimentResult second = run_experiment(config);
    const bool identical = slurp(first.per_run_csv) == slurp(second.per_run_csv) &&
                           slurp(first.aggregate_csv) == slurp(second.aggregate_csv);

    config.out_dir = root / "c";
    config.master_seed = kBaseSeed + 1;
    const ExperimentResult reseeded = run_experiment(config);
    const bool seed_sensitive = slurp(first.per_run_csv) != slurp(reseeded.per_run_csv);

    std::filesystem::remove_all(root);
    report("criterion 9 determinism of CSV outputs", identical && seed_sensitive,
           std::string("same seed ") + (identical ? "identical" : "DIFFERS") +
               ", new seed " + (seed_sensitive ? "differs" : "IDENTICAL"));
}

}  // namespace

// ---------------------------------------------------------------------------

int main() {
    std::printf("acceptance suite: %d-run experiments, %d generations, base seed %llu\n",
                kRunsPerExperiment, kGenerations,
                static_cast<unsigned long long>(kBaseSeed));

    criterion_codec_round_trip();
    criterion_gamma_moments();
    criterion_fitness_arithmetic();

    // Evolution-dependent criteria share these experiment outcomes.
    long long games = 0;
    long long conservation_violations = 0;
    long long bias_violations = 0;
    long long oracle_contract_violations = 0;
    auto absorb = [&](const ExperimentOutcome& outcome) -> const ExperimentOutcome& {
        for (const RunOutcome& run : outcome.runs) {
            games += run.games;
            conservation_violations += run.conservation_violations;
            bias_violations += run.bias_violations;
            oracle_contract_violations += run.oracle_contract_violations;
        }
        return outcome;
    };

    std::vector<ExperimentOutcome> single_flip_batches;
    std::vector<ExperimentOutcome> coin_flip_batches;
    for (int batch = 0; batch < kBatches; ++batch) {
        single_flip_batches.push_back(absorb(
            run_outcomes(DefenderKind::SingleFlipFixedOrder, experiment_seed(batch, 0))));
        coin_flip_batches.push_back(absorb(run_outcomes(
            DefenderKind::EachMatchFlipRandomOrder, experiment_seed(batch, 1))));
        std::printf("  experiments: ordering batch %d/%d done\n", batch + 1, kBatches);
        std::fflush(stdout);
    }
    const ExperimentOutcome alternating = absorb(
        run_outcomes(DefenderKind::EachMatchFlipFixedAlternating, experiment_seed(0, 2)));
    const ExperimentOutcome alternating_2to1 = absorb(run_outcomes(
        DefenderKind::EachMatchFlipFixedAlternating2to1, experiment_seed(0, 3)));
    const ExperimentOutcome uniform_2to1 = absorb(run_outcomes(
        DefenderKind::EachMatchFlipUniformRandom2to1, experiment_seed(0, 4)));
    std::printf("  experiments: bias experiments done\n");
    std::fflush(stdout);

    // Criterion 4: oracle dominance against the predictable single flip.
    {
        const ExperimentOutcome& outcome = single_flip_batches.front();
        int runs_passing = 0;
        for (const RunOutcome& run : outcome.runs) {
            bool run_ok = true;
            for (int g = kGenerations - 10; g < kGenerations; ++g) {
                run_ok &= run.stats[static_cast<std::size_t>(g)].best_fitness >=
                          0.9 * run.oracle_fitness[static_cast<std::size_t>(g)];
            }
            if (run_ok) ++runs_passing;
        }
        const bool ok = runs_passing >= 16 && oracle_contract_violations == 0;
        report("criterion 4 oracle dominance (SingleFlip-FixedOrder)", ok,
               std::to_string(runs_passing) + "/20 runs kept best fitness >= 0.9x oracle "
               "over the final 10 generations (need >= 16); oracle contract violations " +
                   std::to_string(oracle_contract_violations));
    }

    // Criterion 5: defender ordering with a standard-error gap, per batch.
    {
        int batches_passing = 0;
        std::string detail;
        for (int batch = 0; batch < kBatches; ++batch) {
            const MeanAndError flip = final_generation_mean_fitness(single_flip_batches[batch]);
            const MeanAndError coin = final_generation_mean_fitness(coin_flip_batches[batch]);
            const double gap = flip.mean - coin.mean;
            const double combined_se = std::sqrt(flip.standard_error * flip.standard_error +
                                                 coin.standard_error * coin.standard_error);
            const bool batch_ok = gap > 0.0 && gap > combined_se;
            if (batch_ok) ++batches_passing;
            if (!detail.empty()) detail += "; ";
            detail += "batch " + std::to_string(batch) + " gap " + fmt(gap) + " vs se " +
                      fmt(combined_se);
        }
        const bool ok = batches_passing * 100 >= 80 * kBatches;
        report("criterion 5 defender ordering (SingleFlip > EachMatchFlip-RandomOrder)",
               ok, std::to_string(batches_passing) + "/" + std::to_string(kBatches) +
                       " batches show a >1-SE gap; " + detail);
    }

    // Criterion 6: 1-to-1 investment bias at generation 100.
    {
        const double alternating_bias = final_generation_mean_bias(alternating);
        const double coin_bias = final_generation_mean_bias(coin_flip_batches.front());
        const double flip_bias = final_generation_mean_bias(single_flip_batches.front());
        const bool ok = std::abs(alternating_bias) <= 0.25 && std::abs(coin_bias) <= 0.25 &&
                        flip_bias < 0.0;
        report("criterion 6 investment bias, 1-to-1 family", ok,
               "EachMatchFlip-FixedAlternating " + fmt(alternating_bias) +
                   " and EachMatchFlip-RandomOrder " + fmt(coin_bias) +
                   " within +/-0.25; SingleFlip-FixedOrder " + fmt(flip_bias) + " < 0");
    }

    // Criterion 7: 2-to-1 investment bias at generation 100.
    {
        const double alternating_bias = final_generation_mean_bias(alternating_2to1);
        const double uniform_bias = final_generation_mean_bias(uniform_2to1);
        const bool ok = alternating_bias <= -0.6 && uniform_bias <= -0.6;
        report("criterion 7 investment bias, 2-to-1 family", ok,
               "EachMatchFlip-FixedAlternating-2to1 " + fmt(alternating_bias) +
                   " and EachMatchFlip-UniformRandom-2to1 " + fmt(uniform_bias) +
                   " both <= -0.6");
    }

    criterion_ga_structure();
    criterion_determinism();

    // Criterion 10: conservation across every recorded trace above.
    {
        const bool ok = games > 0 && conservation_violations == 0 && bias_violations == 0;
        report("criterion 10 conservation (investment sum and bias bounds)", ok,
               std::to_string(games) + " games checked, " +
                   std::to_string(conservation_violations) + " conservation and " +
                   std::to_string(bias_violations) + " bias violations");
    }

    if (g_failures == 0) {
        std::printf("acceptance suite: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance suite: %d criteria FAILED\n", g_failures);
    return 1;
}
