#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "evomtd/rng.hpp"
#include "evomtd/types.hpp"

namespace evomtd {

// Fixed-length binary genome for one attacker strategy.
//
// Bit layout (positions 1..148):
//   state k (k = 0..15) occupies positions 9k+1 .. 9k+9:
//     position 9k+1          action bit: 0 -> ZD-A, 1 -> ZD-B
//     positions 9k+2..9k+5   next state on observing OS-A (4-bit unsigned,
//                            most significant bit first)
//     positions 9k+6..9k+9   next state on observing OS-B
//   positions 145..148       start state (4-bit unsigned, MSB first)
//
// bits[i] stores position i+1 and is always 0 or 1.
struct Chromosome {
    static constexpr std::size_t kBits = 148;

    std::array<std::uint8_t, kBits> bits{};

    bool operator==(const Chromosome&) const = default;

    // 148-character '0'/'1' string, position 1 first. This is the textual
    // form used in trace files and test fixtures.
    std::string to_string() const;

    // Inverse of to_string. Throws CodecError naming the actual length when
    // it is not 148, or the offending character otherwise.
    static Chromosome from_string(std::string_view text);
};

// Decoded attacker strategy: a 16-state Moore machine. The action map gives
// the exploit invested in while a state is occupied; the transition map is
// keyed on the platform observed at the end of a match. All 16 states are
// materialized even when unreachable from the start state.
struct MooreMachine {
    static constexpr int kStateCount = 16;

    std::uint8_t start_state = 0;                                  // 0..15
    std::array<ExploitTarget, kStateCount> action{};               // per state
    std::array<std::array<std::uint8_t, 2>, kStateCount> transition{};  // [state][platform]

    std::uint8_t next_state(std::uint8_t state, Platform observed) const {
        return transition[state][static_cast<std::size_t>(observed)];
    }

    bool operator==(const MooreMachine&) const = default;
};

// Total genotype-phenotype map; every 148-bit string is a legal genome.
MooreMachine decode(const Chromosome& c);

// Inverse of decode. Throws CodecError if a state index field is out of
// range (valid machines never are).
Chromosome encode(const MooreMachine& m);

// 148 independent fair bits drawn from the stream.
Chromosome random_chromosome(RandomStream& rng);

}  // namespace evomtd
