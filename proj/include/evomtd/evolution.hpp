#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "evomtd/chromosome.hpp"
#include "evomtd/fitness.hpp"
#include "evomtd/game.hpp"
#include "evomtd/metrics.hpp"
#include "evomtd/population.hpp"
#include "evomtd/rng.hpp"

namespace evomtd {

struct GaParams {
    int population_size = 30;
    double crossover_fraction = 0.6;  // share of the next generation bred by crossover
    double per_bit_mutation_rate = 0.5 / Chromosome::kBits;  // ~0.5 flips per genome
    int tournament_size = 2;
    int generations = 100;
};

// Throws ConfigError naming the offending field. crossover_fraction must
// describe an even integer number of children for the population size.
void validate(const GaParams& params);

// Draws tournament_size members uniformly with replacement and returns the
// index of the fittest draw; ties among the drawn are broken uniformly at
// random. Throws std::invalid_argument on an empty population.
std::size_t tournament_select(const ScoredPopulation& pop, int tournament_size,
                              RandomStream& rng);

// Single-point crossover. The cut point is drawn uniformly from 1..148;
// child one takes the first cut bits of the first parent and the rest of the
// second, child two the reverse. A cut at 148 reproduces the parents.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& first,
                                            const Chromosome& second,
                                            RandomStream& rng);

// Flips each bit independently with the given probability.
Chromosome mutate(const Chromosome& c, double rate, RandomStream& rng);

// One breeding step: crossover_fraction*N children from tournament-selected
// parent pairs, the rest tournament-selected copies of old members, then
// every new structure (copies included) is mutated. Draws are consumed from
// `rng` in that order, sequentially.
std::vector<Chromosome> next_generation(const ScoredPopulation& pop,
                                        const GaParams& params,
                                        RandomStream& rng);

// How exploit costs are drawn: one pair shared by the whole generation, or a
// fresh pair per attacker game.
enum class CostSampling { PerGeneration, PerGame };

// Everything one evolutionary run needs. Streams are derived internally
// from (master_seed, run index, generation, role).
struct EvolveConfig {
    DefenderKind defender = DefenderKind::SingleFlipFixedOrder;
    int matches = 365;
    GaParams ga;
    CostModel cost_model;
    FitnessParams fitness_params;
    CostSampling cost_sampling = CostSampling::PerGeneration;
    std::uint64_t master_seed = 1;
};

void validate(const EvolveConfig& config);

// Snapshot of the shared inputs of one generation, handed to observers
// alongside the scored population.
struct GenerationContext {
    int run_index = 0;
    int generation = 0;  // 1-based
    // Per-attacker (cost ZD-A, cost ZD-B); all entries equal under
    // per-generation sampling.
    std::vector<std::array<double, 2>> exploit_costs;
    const std::vector<Platform>* defender_seq = nullptr;
};

using GenerationObserver =
    std::function<void(const GenerationContext&, const ScoredPopulation&)>;

// One full run: initializes a random population, then per generation samples
// costs and the defender realization, evaluates every attacker, records the
// aggregate statistics, and breeds the next population. The observer (when
// set) sees every generation right after evaluation.
std::vector<GenerationStats> evolve_run(const EvolveConfig& config,
                                        int run_index,
                                        const GenerationObserver& observer = {});

}  // namespace evomtd
