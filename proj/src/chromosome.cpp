#include "evomtd/chromosome.hpp"

#include "evomtd/errors.hpp"

namespace evomtd {

namespace {

constexpr std::size_t kBitsPerState = 9;
constexpr std::size_t kStartField = 144;  // 0-based offset of the start-state field

// Reads a 4-bit unsigned field, most significant bit first.
std::uint8_t read_nibble(const Chromosome& c, std::size_t offset) {
    std::uint8_t value = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        value = static_cast<std::uint8_t>((value << 1) | (c.bits[offset + i] & 1));
    }
    return value;
}

void write_nibble(Chromosome& c, std::size_t offset, std::uint8_t value) {
    for (std::size_t i = 0; i < 4; ++i) {
        c.bits[offset + i] = static_cast<std::uint8_t>((value >> (3 - i)) & 1);
    }
}

}  // namespace

std::string Chromosome::to_string() const {
    std::string out(kBits, '0');
    for (std::size_t i = 0; i < kBits; ++i) {
        out[i] = bits[i] ? '1' : '0';
    }
    return out;
}

Chromosome Chromosome::from_string(std::string_view text) {
    if (text.size() != kBits) {
        throw CodecError("chromosome string has length " +
                         std::to_string(text.size()) + ", expected 148");
    }
    Chromosome c;
    for (std::size_t i = 0; i < kBits; ++i) {
        if (text[i] == '0') {
            c.bits[i] = 0;
        } else if (text[i] == '1') {
            c.bits[i] = 1;
        } else {
            throw CodecError("chromosome string has non-binary character '" +
                             std::string(1, text[i]) + "' at position " +
                             std::to_string(i + 1));
        }
    }
    return c;
}

MooreMachine decode(const Chromosome& c) {
    MooreMachine m;
    for (int state = 0; state < MooreMachine::kStateCount; ++state) {
        const std::size_t base = kBitsPerState * static_cast<std::size_t>(state);
        m.action[state] = c.bits[base] ? ExploitTarget::ZdB : ExploitTarget::ZdA;
        m.transition[state][static_cast<std::size_t>(Platform::OsA)] =
            read_nibble(c, base + 1);
        m.transition[state][static_cast<std::size_t>(Platform::OsB)] =
            read_nibble(c, base + 5);
    }
    m.start_state = read_nibble(c, kStartField);
    return m;
}

Chromosome encode(const MooreMachine& m) {
    if (m.start_state >= MooreMachine::kStateCount) {
        throw CodecError("machine start state " + std::to_string(m.start_state) +
                         " is out of range");
    }
    Chromosome c;
    for (int state = 0; state < MooreMachine::kStateCount; ++state) {
        const std::size_t base = kBitsPerState * static_cast<std::size_t>(state);
        c.bits[base] = m.action[state] == ExploitTarget::ZdB ? 1 : 0;
        for (const Platform p : {Platform::OsA, Platform::OsB}) {
            const std::uint8_t target = m.transition[state][static_cast<std::size_t>(p)];
            if (target >= MooreMachine::kStateCount) {
                throw CodecError("machine transition target " + std::to_string(target) +
                                 " is out of range");
            }
        }
        write_nibble(c, base + 1,
                     m.transition[state][static_cast<std::size_t>(Platform::OsA)]);
        write_nibble(c, base + 5,
                     m.transition[state][static_cast<std::size_t>(Platform::OsB)]);
    }
    write_nibble(c, kStartField, m.start_state);
    return c;
}

Chromosome random_chromosome(RandomStream& rng) {
    Chromosome c;
    for (auto& bit : c.bits) {
        bit = static_cast<std::uint8_t>(rng.next_below(2));
    }
    return c;
}

}  // namespace evomtd
