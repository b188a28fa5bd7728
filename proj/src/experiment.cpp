#include "evomtd/experiment.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "evomtd/errors.hpp"

namespace evomtd {

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(begin, end - begin + 1));
}

long long parse_int(std::string_view key, std::string_view value) {
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError(std::string(key) + ": expected an integer, got '" +
                          std::string(value) + "'");
    }
    return out;
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError(std::string(key) + ": expected an unsigned integer, got '" +
                          std::string(value) + "'");
    }
    return out;
}

double parse_double(std::string_view key, std::string_view value) {
    try {
        std::size_t consumed = 0;
        const double out = std::stod(std::string(value), &consumed);
        if (consumed != value.size()) throw std::invalid_argument("trailing data");
        return out;
    } catch (const std::exception&) {
        throw ConfigError(std::string(key) + ": expected a number, got '" +
                          std::string(value) + "'");
    }
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError(std::string(key) + ": expected true/false, got '" +
                      std::string(value) + "'");
}

const char* name(CostSampling mode) {
    return mode == CostSampling::PerGeneration ? "per_generation" : "per_game";
}

const char* name(TransitionPenaltyMode mode) {
    return mode == TransitionPenaltyMode::ConstantOne ? "constant_one"
                                                      : "max_realized_phi";
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

void write_per_run_csv(const std::filesystem::path& path,
                       const std::vector<std::vector<GenerationStats>>& per_run) {
    std::ofstream out = open_for_write(path);
    out << "run,generation";
    for (const char* column : kStatNames) out << ',' << column;
    out << '\n';
    for (std::size_t r = 0; r < per_run.size(); ++r) {
        for (const GenerationStats& row : per_run[r]) {
            out << r << ',' << row.generation;
            for (const auto field : kStatFields) out << ',' << csv_double(row.*field);
            out << '\n';
        }
    }
    if (!out.good()) throw IoError("cannot write " + path.string());
}

void write_aggregate_csv(const std::filesystem::path& path,
                         const std::vector<CrossRunStats>& aggregate) {
    std::ofstream out = open_for_write(path);
    out << "generation";
    for (const char* column : kStatNames) {
        out << ',' << column << ',' << column << "_sd";
    }
    out << '\n';
    for (const CrossRunStats& row : aggregate) {
        out << row.generation;
        for (const auto field : kStatFields) {
            out << ',' << csv_double(row.mean.*field) << ',' << csv_double(row.stddev.*field);
        }
        out << '\n';
    }
    if (!out.good()) throw IoError("cannot write " + path.string());
}

void write_manifest(const std::filesystem::path& path, const ExperimentConfig& config) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["defender"] = name(config.defender);
    doc["matches"] = config.matches;
    doc["runs"] = config.runs;
    doc["master_seed"] = config.master_seed;
    doc["population"] = config.ga.population_size;
    doc["generations"] = config.ga.generations;
    doc["crossover_fraction"] = config.ga.crossover_fraction;
    doc["mutation_rate"] = config.ga.per_bit_mutation_rate;
    doc["tournament_size"] = config.ga.tournament_size;
    doc["cost_mean"] = config.cost_model.mean;
    doc["cost_variance"] = config.cost_model.variance;
    doc["cost_sampling"] = name(config.cost_sampling);
    doc["reward_per_exploit"] = config.fitness_params.reward_per_exploit;
    doc["complexity_weight"] = config.fitness_params.complexity_weight;
    doc["transition_penalty"] = config.fitness_params.transition_penalty;
    doc["transition_penalty_mode"] = name(config.fitness_params.penalty_mode);
    doc["dump_traces"] = config.dump_traces;
    doc["threads"] = config.threads;
    doc["outputs"] = {{"per_run", "per_run.csv"}, {"aggregate", "aggregate.csv"}};
    std::ofstream out = open_for_write(path);
    out << doc.dump(2) << '\n';
    if (!out.good()) throw IoError("cannot write " + path.string());
}

// Observer that appends every game of one run to a dump file.
GenerationObserver trace_dumper(std::ofstream& out) {
    return [&out](const GenerationContext& ctx, const ScoredPopulation& scored) {
        for (std::size_t i = 0; i < scored.members.size(); ++i) {
            const ScoredMember& member = scored.members[i];
            std::ostringstream header;
            header << "run " << ctx.run_index << " generation " << ctx.generation
                   << " attacker " << i << " cost_zda "
                   << csv_double(ctx.exploit_costs[i][0]) << " cost_zdb "
                   << csv_double(ctx.exploit_costs[i][1]) << " chromosome "
                   << member.chromosome.to_string();
            write_trace_dump(out, header.str(), decode(member.chromosome),
                             *ctx.defender_seq, member.trace);
        }
    };
}

std::vector<GenerationStats> execute_run(const ExperimentConfig& config, int run) {
    const EvolveConfig evolve = evolve_config(config);
    if (!config.dump_traces) {
        return evolve_run(evolve, run);
    }
    const std::filesystem::path dir = config.out_dir / "traces";
    std::filesystem::create_directories(dir);
    char file_name[32];
    std::snprintf(file_name, sizeof file_name, "run_%04d.txt", run);
    std::ofstream out = open_for_write(dir / file_name);
    return evolve_run(evolve, run, trace_dumper(out));
}

}  // namespace

std::string csv_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return buffer;
}

void validate(const ExperimentConfig& config) {
    if (config.runs < 1) {
        throw ConfigError("runs must be >= 1, got " + std::to_string(config.runs));
    }
    if (config.threads < 0) {
        throw ConfigError("threads must be >= 0, got " + std::to_string(config.threads));
    }
    validate(evolve_config(config));
}

void apply_key_value(ExperimentConfig& config, std::string_view key,
                     std::string_view value) {
    if (key == "defender") {
        config.defender = parse_defender(value);
    } else if (key == "matches") {
        config.matches = static_cast<int>(parse_int(key, value));
    } else if (key == "runs") {
        config.runs = static_cast<int>(parse_int(key, value));
    } else if (key == "master_seed") {
        config.master_seed = parse_u64(key, value);
    } else if (key == "population") {
        config.ga.population_size = static_cast<int>(parse_int(key, value));
    } else if (key == "generations") {
        config.ga.generations = static_cast<int>(parse_int(key, value));
    } else if (key == "crossover_fraction") {
        config.ga.crossover_fraction = parse_double(key, value);
    } else if (key == "mutation_rate") {
        config.ga.per_bit_mutation_rate = parse_double(key, value);
    } else if (key == "tournament_size") {
        config.ga.tournament_size = static_cast<int>(parse_int(key, value));
    } else if (key == "cost_mean") {
        config.cost_model.mean = parse_double(key, value);
    } else if (key == "cost_variance") {
        config.cost_model.variance = parse_double(key, value);
    } else if (key == "cost_sampling") {
        if (value == "per_generation") {
            config.cost_sampling = CostSampling::PerGeneration;
        } else if (value == "per_game") {
            config.cost_sampling = CostSampling::PerGame;
        } else {
            throw ConfigError("cost_sampling: expected per_generation or per_game, got '" +
                              std::string(value) + "'");
        }
    } else if (key == "reward_per_exploit") {
        config.fitness_params.reward_per_exploit = parse_double(key, value);
    } else if (key == "complexity_weight") {
        config.fitness_params.complexity_weight = parse_double(key, value);
    } else if (key == "transition_penalty") {
        config.fitness_params.transition_penalty = parse_double(key, value);
    } else if (key == "transition_penalty_mode") {
        if (value == "constant_one") {
            config.fitness_params.penalty_mode = TransitionPenaltyMode::ConstantOne;
        } else if (value == "max_realized_phi") {
            config.fitness_params.penalty_mode = TransitionPenaltyMode::MaxRealizedPhi;
        } else {
            throw ConfigError(
                "transition_penalty_mode: expected constant_one or max_realized_phi, got '" +
                std::string(value) + "'");
        }
    } else if (key == "out_dir") {
        config.out_dir = std::string(value);
    } else if (key == "dump_traces") {
        config.dump_traces = parse_bool(key, value);
    } else if (key == "threads") {
        config.threads = static_cast<int>(parse_int(key, value));
    } else {
        throw ConfigError("unknown configuration key '" + std::string(key) + "'");
    }
}

void apply_config_file(ExperimentConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path.string());
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path.string() + ":" + std::to_string(line_number) +
                              ": expected key = value");
        }
        apply_key_value(config, trim(stripped.substr(0, eq)),
                        trim(stripped.substr(eq + 1)));
    }
}

EvolveConfig evolve_config(const ExperimentConfig& config) {
    EvolveConfig out;
    out.defender = config.defender;
    out.matches = config.matches;
    out.ga = config.ga;
    out.cost_model = config.cost_model;
    out.fitness_params = config.fitness_params;
    out.cost_sampling = config.cost_sampling;
    out.master_seed = config.master_seed;
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate(config);
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + config.out_dir.string() +
                      ": " + ec.message());
    }

    ExperimentResult result;
    result.out_dir = config.out_dir;
    result.per_run.resize(static_cast<std::size_t>(config.runs));

    int workers = config.threads;
    if (workers == 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers == 0) workers = 1;
    }
    if (workers <= 1 || config.runs == 1) {
        for (int r = 0; r < config.runs; ++r) {
            result.per_run[static_cast<std::size_t>(r)] = execute_run(config, r);
        }
    } else {
        std::atomic<int> next_run{0};
        auto worker = [&]() {
            for (;;) {
                const int r = next_run.fetch_add(1);
                if (r >= config.runs) return;
                result.per_run[static_cast<std::size_t>(r)] = execute_run(config, r);
            }
        };
        std::vector<std::future<void>> tasks;
        for (int w = 0; w < workers; ++w) {
            tasks.push_back(std::async(std::launch::async, worker));
        }
        for (auto& task : tasks) task.get();
    }

    result.aggregate = aggregate_runs(result.per_run);

    result.per_run_csv = config.out_dir / "per_run.csv";
    result.aggregate_csv = config.out_dir / "aggregate.csv";
    result.manifest = config.out_dir / "manifest.json";
    write_per_run_csv(result.per_run_csv, result.per_run);
    write_aggregate_csv(result.aggregate_csv, result.aggregate);
    write_manifest(result.manifest, config);
    return result;
}

std::vector<DefenderKind> suite_family(std::string_view family) {
    if (family == "1to1") {
        return {DefenderKind::SingleFlipFixedOrder, DefenderKind::SingleFlipRandomOrder,
                DefenderKind::EachMatchFlipFixedAlternating,
                DefenderKind::EachMatchFlipRandomOrder};
    }
    if (family == "2to1") {
        return {DefenderKind::SingleFlipAFixedOrder, DefenderKind::SingleFlipBFixedOrder,
                DefenderKind::SingleFlipRandomOrder2to1,
                DefenderKind::EachMatchFlipFixedAlternating2to1,
                DefenderKind::EachMatchFlipUniformRandom2to1};
    }
    throw ConfigError("suite: expected 1to1 or 2to1, got '" + std::string(family) + "'");
}

std::vector<ExperimentResult> run_suite(std::string_view family,
                                        const ExperimentConfig& base) {
    const std::vector<DefenderKind> defenders = suite_family(family);
    std::vector<ExperimentResult> results;
    results.reserve(defenders.size());
    for (std::size_t i = 0; i < defenders.size(); ++i) {
        ExperimentConfig config = base;
        config.defender = defenders[i];
        config.master_seed = derive_seed(base.master_seed, i, 0, StreamRole::Suite);
        config.out_dir = base.out_dir / name(defenders[i]);
        results.push_back(run_experiment(config));
    }

    std::error_code ec;
    std::filesystem::create_directories(base.out_dir, ec);
    const std::filesystem::path comparison = base.out_dir / "comparison.csv";
    std::ofstream out = open_for_write(comparison);
    out << "defender,generation";
    for (const char* column : kStatNames) {
        out << ',' << column << ',' << column << "_sd";
    }
    out << '\n';
    for (std::size_t i = 0; i < defenders.size(); ++i) {
        for (const CrossRunStats& row : results[i].aggregate) {
            out << name(defenders[i]) << ',' << row.generation;
            for (const auto field : kStatFields) {
                out << ',' << csv_double(row.mean.*field) << ','
                    << csv_double(row.stddev.*field);
            }
            out << '\n';
        }
    }
    if (!out.good()) throw IoError("cannot write " + comparison.string());
    return results;
}

}  // namespace evomtd
