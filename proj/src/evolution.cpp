#include "evomtd/evolution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "evomtd/errors.hpp"

namespace evomtd {

namespace {

// Number of crossover children implied by the params; validated to be an
// even integer (pairs of parents produce pairs of children).
int crossover_children(const GaParams& params) {
    const double exact = params.crossover_fraction * params.population_size;
    const double rounded = std::round(exact);
    if (std::abs(exact - rounded) > 1e-9) {
        throw ConfigError("crossover_fraction: " + std::to_string(params.crossover_fraction) +
                          " of population " + std::to_string(params.population_size) +
                          " is not an integer");
    }
    const int children = static_cast<int>(rounded);
    if (children % 2 != 0) {
        throw ConfigError("crossover_fraction: child count " + std::to_string(children) +
                          " is odd; crossover produces children in pairs");
    }
    return children;
}

}  // namespace

void validate(const GaParams& params) {
    if (params.population_size < 1) {
        throw ConfigError("population_size must be >= 1, got " +
                          std::to_string(params.population_size));
    }
    if (params.crossover_fraction < 0.0 || params.crossover_fraction > 1.0) {
        throw ConfigError("crossover_fraction must be in [0, 1], got " +
                          std::to_string(params.crossover_fraction));
    }
    if (params.per_bit_mutation_rate < 0.0 || params.per_bit_mutation_rate > 1.0) {
        throw ConfigError("per_bit_mutation_rate must be in [0, 1], got " +
                          std::to_string(params.per_bit_mutation_rate));
    }
    if (params.tournament_size < 1) {
        throw ConfigError("tournament_size must be >= 1, got " +
                          std::to_string(params.tournament_size));
    }
    if (params.generations < 1) {
        throw ConfigError("generations must be >= 1, got " +
                          std::to_string(params.generations));
    }
    crossover_children(params);
}

std::size_t tournament_select(const ScoredPopulation& pop, int tournament_size,
                              RandomStream& rng) {
    if (pop.members.empty()) {
        throw std::invalid_argument("tournament_select: empty population");
    }
    if (tournament_size < 1) {
        throw std::invalid_argument("tournament_select: tournament size must be >= 1");
    }
    const std::uint64_t n = pop.members.size();
    std::vector<std::size_t> best;
    double best_fitness = 0.0;
    for (int i = 0; i < tournament_size; ++i) {
        const auto candidate = static_cast<std::size_t>(rng.next_below(n));
        const double f = pop.members[candidate].fitness.total;
        if (best.empty() || f > best_fitness) {
            best.assign(1, candidate);
            best_fitness = f;
        } else if (f == best_fitness) {
            best.push_back(candidate);
        }
    }
    if (best.size() == 1) return best.front();
    return best[static_cast<std::size_t>(rng.next_below(best.size()))];
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& first,
                                            const Chromosome& second,
                                            RandomStream& rng) {
    const std::size_t cut = static_cast<std::size_t>(rng.next_below(Chromosome::kBits)) + 1;
    Chromosome child_one = first;
    Chromosome child_two = second;
    for (std::size_t i = cut; i < Chromosome::kBits; ++i) {
        child_one.bits[i] = second.bits[i];
        child_two.bits[i] = first.bits[i];
    }
    return {child_one, child_two};
}

Chromosome mutate(const Chromosome& c, double rate, RandomStream& rng) {
    if (rate < 0.0 || rate > 1.0) {
        throw std::invalid_argument("mutate: rate must be in [0, 1]");
    }
    Chromosome out = c;
    for (auto& bit : out.bits) {
        if (rng.next_bernoulli(rate)) bit ^= 1;
    }
    return out;
}

std::vector<Chromosome> next_generation(const ScoredPopulation& pop,
                                        const GaParams& params,
                                        RandomStream& rng) {
    validate(params);
    if (pop.members.size() != static_cast<std::size_t>(params.population_size)) {
        throw ConfigError("population_size: scored population has " +
                          std::to_string(pop.members.size()) + " members, expected " +
                          std::to_string(params.population_size));
    }
    const int children = crossover_children(params);
    std::vector<Chromosome> next;
    next.reserve(static_cast<std::size_t>(params.population_size));
    for (int pair = 0; pair < children / 2; ++pair) {
        const std::size_t p1 = tournament_select(pop, params.tournament_size, rng);
        const std::size_t p2 = tournament_select(pop, params.tournament_size, rng);
        auto [c1, c2] = crossover(pop.members[p1].chromosome,
                                  pop.members[p2].chromosome, rng);
        next.push_back(std::move(c1));
        next.push_back(std::move(c2));
    }
    while (next.size() < static_cast<std::size_t>(params.population_size)) {
        const std::size_t keep = tournament_select(pop, params.tournament_size, rng);
        next.push_back(pop.members[keep].chromosome);
    }
    for (Chromosome& c : next) {
        c = mutate(c, params.per_bit_mutation_rate, rng);
    }
    return next;
}

void validate(const EvolveConfig& config) {
    if (config.matches < 1) {
        throw ConfigError("matches must be >= 1, got " + std::to_string(config.matches));
    }
    if (config.cost_model.mean <= 0.0) {
        throw ConfigError("cost_mean must be positive, got " +
                          std::to_string(config.cost_model.mean));
    }
    if (config.cost_model.variance <= 0.0) {
        throw ConfigError("cost_variance must be positive, got " +
                          std::to_string(config.cost_model.variance));
    }
    if (config.fitness_params.reward_per_exploit < 0.0) {
        throw ConfigError("reward_per_exploit must be >= 0, got " +
                          std::to_string(config.fitness_params.reward_per_exploit));
    }
    if (config.fitness_params.complexity_weight < 0.0 ||
        config.fitness_params.complexity_weight > 1.0) {
        throw ConfigError("complexity_weight must be in [0, 1], got " +
                          std::to_string(config.fitness_params.complexity_weight));
    }
    if (config.fitness_params.transition_penalty < 0.0) {
        throw ConfigError("transition_penalty must be >= 0, got " +
                          std::to_string(config.fitness_params.transition_penalty));
    }
    validate(config.ga);
}

std::vector<GenerationStats> evolve_run(const EvolveConfig& config,
                                        int run_index,
                                        const GenerationObserver& observer) {
    validate(config);
    const auto run = static_cast<std::uint64_t>(run_index);
    const auto n = static_cast<std::size_t>(config.ga.population_size);

    RandomStream init_stream(derive_seed(config.master_seed, run, 0, StreamRole::Init));
    std::vector<Chromosome> population;
    population.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        population.push_back(random_chromosome(init_stream));
    }

    std::vector<GenerationStats> history;
    history.reserve(static_cast<std::size_t>(config.ga.generations));
    for (int g = 1; g <= config.ga.generations; ++g) {
        const auto gen = static_cast<std::uint64_t>(g);
        RandomStream cost_stream(derive_seed(config.master_seed, run, gen, StreamRole::Costs));
        RandomStream defender_stream(
            derive_seed(config.master_seed, run, gen, StreamRole::Defender));
        RandomStream ga_stream(derive_seed(config.master_seed, run, gen, StreamRole::Ga));

        GenerationContext ctx;
        ctx.run_index = run_index;
        ctx.generation = g;
        ctx.exploit_costs.resize(n);
        if (config.cost_sampling == CostSampling::PerGeneration) {
            const double cost_a = sample_cost(config.cost_model, cost_stream);
            const double cost_b = sample_cost(config.cost_model, cost_stream);
            for (auto& pair : ctx.exploit_costs) pair = {cost_a, cost_b};
        } else {
            for (auto& pair : ctx.exploit_costs) {
                pair[0] = sample_cost(config.cost_model, cost_stream);
                pair[1] = sample_cost(config.cost_model, cost_stream);
            }
        }
        const std::vector<Platform> schedule =
            defender_sequence(config.defender, config.matches, defender_stream);
        ctx.defender_seq = &schedule;

        ScoredPopulation scored;
        scored.generation = g;
        scored.members.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const MooreMachine machine = decode(population[i]);
            GameTrace trace = play_game(machine, schedule, ctx.exploit_costs[i]);
            const FitnessBreakdown score = fitness(trace, config.fitness_params);
            scored.members.push_back({population[i], std::move(trace), score});
        }

        history.push_back(aggregate_generation(scored));
        if (observer) observer(ctx, scored);

        if (g < config.ga.generations) {
            population = next_generation(scored, config.ga, ga_stream);
        }
    }
    return history;
}

}  // namespace evomtd
