#include "evomtd/fitness.hpp"

namespace evomtd {

int game_payoff(const GameTrace& trace) { return trace.payoff; }

double creation_reward(const GameTrace& trace, const FitnessParams& params) {
    return trace.exploits_created * params.reward_per_exploit;
}

double complexity_cost(const GameTrace& trace, const FitnessParams& params) {
    double penalty = params.transition_penalty;
    if (params.penalty_mode == TransitionPenaltyMode::MaxRealizedPhi) {
        penalty = trace.payoff > 0 ? 1.0 : 0.0;
    }
    return params.complexity_weight * penalty * trace.state_changes;
}

FitnessBreakdown fitness(const GameTrace& trace, const FitnessParams& params) {
    FitnessBreakdown b;
    b.game_payoff = game_payoff(trace);
    b.creation_reward = creation_reward(trace, params);
    b.complexity_cost = complexity_cost(trace, params);
    b.total = b.game_payoff + b.creation_reward - b.complexity_cost;
    b.matches = trace.matches;
    return b;
}

}  // namespace evomtd
