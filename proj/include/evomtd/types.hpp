#pragma once

#include <cstdint>

namespace evomtd {

// The two operating systems the defender can activate. The binary game is
// fixed at two platforms.
enum class Platform : std::uint8_t { OsA = 0, OsB = 1 };

// The zero-day exploit an attacker state invests in. ZD-A compromises OS-A,
// ZD-B compromises OS-B.
enum class ExploitTarget : std::uint8_t { ZdA = 0, ZdB = 1 };

inline const char* name(Platform p) { return p == Platform::OsA ? "OS-A" : "OS-B"; }
inline const char* name(ExploitTarget e) { return e == ExploitTarget::ZdA ? "ZD-A" : "ZD-B"; }

// Zero-day the attacker needs for a given active platform.
inline ExploitTarget exploit_for(Platform p) {
    return p == Platform::OsA ? ExploitTarget::ZdA : ExploitTarget::ZdB;
}

}  // namespace evomtd
