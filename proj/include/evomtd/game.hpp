#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "evomtd/chromosome.hpp"
#include "evomtd/rng.hpp"
#include "evomtd/types.hpp"

namespace evomtd {

// The nine platform-migration policies. The 1-to-1 family activates each
// platform for half the matches of a game; the 2-to-1 family activates OS-A
// twice as often as OS-B.
enum class DefenderKind {
    SingleFlipFixedOrder,
    SingleFlipRandomOrder,
    EachMatchFlipFixedAlternating,
    EachMatchFlipRandomOrder,
    SingleFlipAFixedOrder,
    SingleFlipBFixedOrder,
    SingleFlipRandomOrder2to1,
    EachMatchFlipFixedAlternating2to1,
    EachMatchFlipUniformRandom2to1,
};

constexpr std::array<DefenderKind, 9> kAllDefenders = {
    DefenderKind::SingleFlipFixedOrder,
    DefenderKind::SingleFlipRandomOrder,
    DefenderKind::EachMatchFlipFixedAlternating,
    DefenderKind::EachMatchFlipRandomOrder,
    DefenderKind::SingleFlipAFixedOrder,
    DefenderKind::SingleFlipBFixedOrder,
    DefenderKind::SingleFlipRandomOrder2to1,
    DefenderKind::EachMatchFlipFixedAlternating2to1,
    DefenderKind::EachMatchFlipUniformRandom2to1,
};

const char* name(DefenderKind kind);

// Parses the hyphenated policy name ("SingleFlip-FixedOrder", ...).
// Throws ConfigError listing the valid names on an unknown kind.
DefenderKind parse_defender(std::string_view text);

// Platform activated in each of the `matches` matches under the given
// policy. Randomized policies draw from `rng`:
//   SingleFlip-RandomOrder               one fair coin: which OS leads
//                                        (block lengths stay floor(T/2) then
//                                        the remainder, whichever OS leads)
//   SingleFlip-RandomOrder-2to1          one fair coin: the A-first or the
//                                        B-first 2-to-1 single-flip schedule
//   EachMatchFlip-RandomOrder            one fair coin per match
//   EachMatchFlip-UniformRandom-2to1     P(OS-A) = 2/3 per match
// Fixed policies consume no draws. With the defaults (T = 365) the blocks
// are 182/183 for the 1-to-1 single flips and 243/122 for the 2-to-1 ones.
std::vector<Platform> defender_sequence(DefenderKind kind, int matches,
                                        RandomStream& rng);

// Per-game exploit bookkeeping. An exploit exists once the attacker's
// cumulative integer investment reaches its (real-valued) creation cost;
// investment keeps accruing after creation because the attacker cannot
// observe it.
struct ExploitEconomy {
    std::array<double, 2> cost{};   // indexed by ExploitTarget
    std::array<int, 2> invested{};
    std::array<bool, 2> created{};

    void invest(ExploitTarget target) {
        const auto i = static_cast<std::size_t>(target);
        ++invested[i];
        if (!created[i] && static_cast<double>(invested[i]) >= cost[i]) {
            created[i] = true;
        }
    }

    bool has(ExploitTarget target) const {
        return created[static_cast<std::size_t>(target)];
    }
};

// Complete record of one game of T matches.
struct GameTrace {
    int matches = 0;          // T
    int payoff = 0;           // number of compromised matches
    int investment_zda = 0;
    int investment_zdb = 0;
    int exploits_created = 0;
    int state_changes = 0;    // realized transitions to a different state
    std::vector<std::uint8_t> compromised;  // per match, 0/1
    std::vector<std::uint8_t> state;        // state occupied in each match
};

// Plays one game. Per match t (state q starts at the machine's start state):
//   1. invest one unit in the exploit named by the action of q; creation is
//      effective immediately, in this match
//   2. the match is compromised iff the exploit for the activated platform
//      exists
//   3. q moves along the transition for the observed platform; a move to a
//      different state counts toward state_changes
// Exploit state is fresh per game.
GameTrace play_game(const MooreMachine& machine,
                    const std::vector<Platform>& defender_seq,
                    const std::array<double, 2>& exploit_costs);

// Line-oriented dump of one game, one record per match:
//   <match> <state> <action> <platform> <compromised>
// preceded by a '#' header carrying the context string.
void write_trace_dump(std::ostream& out, const std::string& header,
                      const MooreMachine& machine,
                      const std::vector<Platform>& defender_seq,
                      const GameTrace& trace);

}  // namespace evomtd
