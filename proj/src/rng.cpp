#include "evomtd/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace evomtd {

std::uint64_t RandomStream::next_below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("next_below: bound must be positive");
    }
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
        const std::uint64_t candidate = next_u64() & mask;
        if (candidate < bound) return candidate;
    }
}

double RandomStream::next_normal() {
    for (;;) {
        const double u = 2.0 * next_unit() - 1.0;
        const double v = 2.0 * next_unit() - 1.0;
        const double s = u * u + v * v;
        if (s >= 1.0 || s == 0.0) continue;
        return u * std::sqrt(-2.0 * std::log(s) / s);
    }
}

double RandomStream::next_gamma(double shape, double rate) {
    if (shape <= 0.0 || rate <= 0.0) {
        throw std::domain_error("next_gamma: shape and rate must be positive");
    }
    if (shape < 1.0) {
        // Gamma(a) = Gamma(a+1) * U^(1/a)
        const double boost = std::pow(next_unit(), 1.0 / shape);
        return next_gamma(shape + 1.0, rate) * boost;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_unit();
        if (u < 1.0 - 0.0331 * (x * x) * (x * x)) {
            return d * v / rate;
        }
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
            return d * v / rate;
        }
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run,
                          std::uint64_t generation, StreamRole role) {
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ run);
    h = splitmix64(h ^ generation);
    h = splitmix64(h ^ static_cast<std::uint64_t>(role));
    return h;
}

GammaParams gamma_params(const CostModel& model) {
    if (model.mean <= 0.0) {
        throw std::domain_error("gamma_params: mean must be positive");
    }
    if (model.variance <= 0.0) {
        throw std::domain_error("gamma_params: variance must be positive");
    }
    return {model.mean * model.mean / model.variance,
            model.mean / model.variance};
}

double sample_cost(const CostModel& model, RandomStream& rng) {
    const GammaParams p = gamma_params(model);
    return rng.next_gamma(p.shape, p.rate);
}

}  // namespace evomtd
