#include "evomtd/game.hpp"

#include <ostream>

#include "evomtd/errors.hpp"

namespace evomtd {

const char* name(DefenderKind kind) {
    switch (kind) {
        case DefenderKind::SingleFlipFixedOrder: return "SingleFlip-FixedOrder";
        case DefenderKind::SingleFlipRandomOrder: return "SingleFlip-RandomOrder";
        case DefenderKind::EachMatchFlipFixedAlternating: return "EachMatchFlip-FixedAlternating";
        case DefenderKind::EachMatchFlipRandomOrder: return "EachMatchFlip-RandomOrder";
        case DefenderKind::SingleFlipAFixedOrder: return "SingleFlip-A-FixedOrder";
        case DefenderKind::SingleFlipBFixedOrder: return "SingleFlip-B-FixedOrder";
        case DefenderKind::SingleFlipRandomOrder2to1: return "SingleFlip-RandomOrder-2to1";
        case DefenderKind::EachMatchFlipFixedAlternating2to1: return "EachMatchFlip-FixedAlternating-2to1";
        case DefenderKind::EachMatchFlipUniformRandom2to1: return "EachMatchFlip-UniformRandom-2to1";
    }
    return "?";
}

DefenderKind parse_defender(std::string_view text) {
    for (const DefenderKind kind : kAllDefenders) {
        if (text == name(kind)) return kind;
    }
    std::string valid;
    for (const DefenderKind kind : kAllDefenders) {
        if (!valid.empty()) valid += ", ";
        valid += name(kind);
    }
    throw ConfigError("unknown defender '" + std::string(text) +
                      "'; valid kinds: " + valid);
}

namespace {

std::vector<Platform> two_blocks(int matches, int first_len, Platform first,
                                 Platform second) {
    std::vector<Platform> seq(static_cast<std::size_t>(matches));
    for (int t = 0; t < matches; ++t) {
        seq[static_cast<std::size_t>(t)] = t < first_len ? first : second;
    }
    return seq;
}

}  // namespace

std::vector<Platform> defender_sequence(DefenderKind kind, int matches,
                                        RandomStream& rng) {
    if (matches < 1) {
        throw ConfigError("matches must be >= 1, got " + std::to_string(matches));
    }
    const int half = matches / 2;            // 182 at T = 365
    const int two_thirds = 2 * matches / 3;  // 243 at T = 365
    std::vector<Platform> seq;
    switch (kind) {
        case DefenderKind::SingleFlipFixedOrder:
            return two_blocks(matches, half, Platform::OsA, Platform::OsB);
        case DefenderKind::SingleFlipRandomOrder: {
            const bool a_leads = rng.next_below(2) == 0;
            return a_leads ? two_blocks(matches, half, Platform::OsA, Platform::OsB)
                           : two_blocks(matches, half, Platform::OsB, Platform::OsA);
        }
        case DefenderKind::EachMatchFlipFixedAlternating:
            seq.resize(static_cast<std::size_t>(matches));
            for (int t = 0; t < matches; ++t) {
                seq[static_cast<std::size_t>(t)] =
                    t % 2 == 0 ? Platform::OsA : Platform::OsB;
            }
            return seq;
        case DefenderKind::EachMatchFlipRandomOrder:
            seq.resize(static_cast<std::size_t>(matches));
            for (auto& p : seq) {
                p = rng.next_below(2) == 0 ? Platform::OsA : Platform::OsB;
            }
            return seq;
        case DefenderKind::SingleFlipAFixedOrder:
            return two_blocks(matches, two_thirds, Platform::OsA, Platform::OsB);
        case DefenderKind::SingleFlipBFixedOrder:
            return two_blocks(matches, matches - two_thirds, Platform::OsB,
                              Platform::OsA);
        case DefenderKind::SingleFlipRandomOrder2to1: {
            const bool a_first = rng.next_below(2) == 0;
            return defender_sequence(a_first ? DefenderKind::SingleFlipAFixedOrder
                                             : DefenderKind::SingleFlipBFixedOrder,
                                     matches, rng);
        }
        case DefenderKind::EachMatchFlipFixedAlternating2to1:
            seq.resize(static_cast<std::size_t>(matches));
            for (int t = 0; t < matches; ++t) {
                seq[static_cast<std::size_t>(t)] =
                    t % 3 == 2 ? Platform::OsB : Platform::OsA;
            }
            return seq;
        case DefenderKind::EachMatchFlipUniformRandom2to1:
            seq.resize(static_cast<std::size_t>(matches));
            for (auto& p : seq) {
                p = rng.next_unit() < 2.0 / 3.0 ? Platform::OsA : Platform::OsB;
            }
            return seq;
    }
    throw ConfigError("unknown defender kind");
}

GameTrace play_game(const MooreMachine& machine,
                    const std::vector<Platform>& defender_seq,
                    const std::array<double, 2>& exploit_costs) {
    const int matches = static_cast<int>(defender_seq.size());
    GameTrace trace;
    trace.matches = matches;
    trace.compromised.resize(defender_seq.size());
    trace.state.resize(defender_seq.size());

    ExploitEconomy economy;
    economy.cost = exploit_costs;

    std::uint8_t q = machine.start_state;
    for (int t = 0; t < matches; ++t) {
        const auto idx = static_cast<std::size_t>(t);
        trace.state[idx] = q;

        economy.invest(machine.action[q]);

        const Platform activated = defender_seq[idx];
        const bool hit = economy.has(exploit_for(activated));
        trace.compromised[idx] = hit ? 1 : 0;
        trace.payoff += hit ? 1 : 0;

        const std::uint8_t next = machine.next_state(q, activated);
        if (next != q) ++trace.state_changes;
        q = next;
    }

    trace.investment_zda = economy.invested[static_cast<std::size_t>(ExploitTarget::ZdA)];
    trace.investment_zdb = economy.invested[static_cast<std::size_t>(ExploitTarget::ZdB)];
    trace.exploits_created = (economy.created[0] ? 1 : 0) + (economy.created[1] ? 1 : 0);
    return trace;
}

void write_trace_dump(std::ostream& out, const std::string& header,
                      const MooreMachine& machine,
                      const std::vector<Platform>& defender_seq,
                      const GameTrace& trace) {
    out << "# " << header << "\n";
    for (std::size_t t = 0; t < defender_seq.size(); ++t) {
        const std::uint8_t q = trace.state[t];
        out << (t + 1) << ' ' << static_cast<int>(q) << ' '
            << name(machine.action[q]) << ' ' << name(defender_seq[t]) << ' '
            << static_cast<int>(trace.compromised[t]) << "\n";
    }
}

}  // namespace evomtd
