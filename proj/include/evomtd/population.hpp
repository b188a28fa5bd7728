#pragma once

#include <vector>

#include "evomtd/chromosome.hpp"
#include "evomtd/fitness.hpp"
#include "evomtd/game.hpp"

namespace evomtd {

// One evaluated attacker: its genome, the game it played this generation,
// and the resulting fitness.
struct ScoredMember {
    Chromosome chromosome;
    GameTrace trace;
    FitnessBreakdown fitness;
};

struct ScoredPopulation {
    int generation = 1;  // 1-based
    std::vector<ScoredMember> members;
};

}  // namespace evomtd
