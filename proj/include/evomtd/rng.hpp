#pragma once

#include <cstdint>
#include <random>

namespace evomtd {

// Deterministic pseudo-random stream. The engine is std::mt19937_64, whose
// output for a given 64-bit seed is fully specified by the standard; every
// distribution draw below is built by hand on top of next_u64() so that the
// sequence of values does not depend on the standard library implementation.
// Floating-point draws that go through libm (log/sqrt in the normal and
// gamma samplers) are identical on a given platform/libc.
//
// Streams are single-owner: concurrent tasks must each hold their own
// stream, normally obtained through derive_seed().
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on {0, 1, ..., bound-1} by masked rejection (unbiased).
    std::uint64_t next_below(std::uint64_t bound);

    bool next_bernoulli(double p) { return next_unit() < p; }

    // Standard normal via the Marsaglia polar method. The second variate of
    // each accepted pair is discarded to keep the draw protocol stateless.
    double next_normal();

    // One draw from Gamma(shape, rate), strictly positive.
    // Marsaglia-Tsang rejection for shape >= 1, with the usual power boost
    // for shape < 1.
    double next_gamma(double shape, double rate);

private:
    std::mt19937_64 engine_;
};

// Labels for the per-(run, generation) streams an experiment derives from
// its master seed.
enum class StreamRole : std::uint64_t {
    Init = 1,      // population initialization (one per run, generation 0)
    Costs = 2,     // exploit-cost draws
    Defender = 3,  // defender schedule realization
    Ga = 4,        // selection, crossover, mutation
    Suite = 5,     // per-defender master seeds inside a suite
};

// Derived-stream scheme: the master seed and the (run, generation, role)
// label are absorbed through the splitmix64 finalizer, one word at a time.
// Every stream in an experiment is defined this way, so results do not
// depend on scheduling or on how many draws other streams consumed.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run,
                          std::uint64_t generation, StreamRole role);

// Splitmix64 finalizer, exposed for the seed-derivation tests.
std::uint64_t splitmix64(std::uint64_t x);

// Exploit-creation cost model: Gamma-distributed with the given mean and
// variance (resource units and squared resource units).
struct CostModel {
    double mean = 100.0;
    double variance = 30.0;
};

struct GammaParams {
    double shape = 0.0;
    double rate = 0.0;
};

// shape = mean^2 / variance, rate = mean / variance.
// Throws std::domain_error unless mean > 0 and variance > 0.
GammaParams gamma_params(const CostModel& model);

// One cost draw from the model's Gamma distribution.
double sample_cost(const CostModel& model, RandomStream& rng);

}  // namespace evomtd
