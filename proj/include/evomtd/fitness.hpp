#pragma once

#include "evomtd/game.hpp"

namespace evomtd {

// How the transition-penalty factor in the complexity cost is obtained.
// ConstantOne uses the configured constant (default 1); MaxRealizedPhi uses
// the attacker's best per-match outcome in the trace (1 if any match was
// compromised, else 0), which zeroes the complexity cost of never-successful
// attackers.
enum class TransitionPenaltyMode { ConstantOne, MaxRealizedPhi };

struct FitnessParams {
    double reward_per_exploit = 1.0;   // intrinsic reward per created exploit
    double complexity_weight = 0.1;    // unit strategic complexity, in [0, 1]
    double transition_penalty = 1.0;   // constant factor under ConstantOne
    TransitionPenaltyMode penalty_mode = TransitionPenaltyMode::ConstantOne;
};

// The three fitness terms and their combination for one game.
struct FitnessBreakdown {
    double game_payoff = 0.0;      // compromised matches
    double creation_reward = 0.0;  // exploits created x reward
    double complexity_cost = 0.0;  // weight x penalty x state changes
    double total = 0.0;            // payoff + reward - cost
    int matches = 0;
};

int game_payoff(const GameTrace& trace);
double creation_reward(const GameTrace& trace, const FitnessParams& params);
double complexity_cost(const GameTrace& trace, const FitnessParams& params);

FitnessBreakdown fitness(const GameTrace& trace, const FitnessParams& params);

}  // namespace evomtd
